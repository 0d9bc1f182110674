#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hermcodes {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Dense row-major matrix over the prime field F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; on an empty 0-column matrix the first row fixes the width.
  void append_row(std::span<const std::uint32_t> values);

  bool is_zero() const;
  FpMatrix transposed() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  bool operator==(const FpMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form in place. Returns the pivot columns.
std::vector<std::size_t> rref(FpMatrix& m);

std::size_t rank(FpMatrix m);

/// Basis, one vector per row, of {v : m v = 0}. Rows come out in RREF.
FpMatrix nullspace(const FpMatrix& m);

/// The nonzero rows of the RREF of m: a canonical basis of its row space.
FpMatrix row_basis(const FpMatrix& m);

/// Solves a x = b, returning any solution.
std::optional<std::vector<std::uint32_t>> solve(const FpMatrix& a, std::span<const std::uint32_t> b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

}  // namespace hermcodes
