#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermcodes/gf.hpp"

namespace hermcodes {

/// Dense matrix with entries in the ambient field of a tower. In practice the
/// entries live in F_{q^2}; elimination only needs field operations, so no
/// separate subfield representation is used.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static FieldMatrix identity(const FieldTower& t, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FFElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FFElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<FFElement>& entries() const noexcept { return data_; }

  bool is_zero() const;
  bool operator==(const FieldMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FFElement> data_;
};

FieldMatrix mat_mul(const FieldTower& t, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_add(const FieldTower& t, const FieldMatrix& a, const FieldMatrix& b);
/// A* : conjugate (x -> x^q) every entry, then transpose.
FieldMatrix conj_transpose(const FieldTower& t, const FieldMatrix& a);
std::size_t mat_rank(const FieldTower& t, FieldMatrix a);
std::optional<FieldMatrix> mat_inverse(const FieldTower& t, const FieldMatrix& a);

}  // namespace hermcodes
