#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hermcodes/field_matrix.hpp"
#include "hermcodes/fp_matrix.hpp"
#include "hermcodes/gf.hpp"

namespace hermcodes {

/// A q^2-polynomial f(x) = Σ_{i<n} c_i x^{q^{2i}} over F_{q^{2n}}, reduced
/// modulo x^{q^{2n}} - x. Index i is the q^2-exponent and is taken mod n.
class LinPoly {
 public:
  explicit LinPoly(TowerPtr tower);
  LinPoly(TowerPtr tower, std::vector<FFElement> coeffs);

  static LinPoly identity(TowerPtr tower);
  static LinPoly monomial(TowerPtr tower, FFElement c, std::int64_t index);
  /// Inverse of to_fp_vector().
  static LinPoly from_fp_vector(TowerPtr tower, std::span<const std::uint32_t> v);

  const TowerPtr& tower() const noexcept { return tower_; }
  const FieldTower& field() const noexcept { return *tower_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<FFElement>& coeffs() const noexcept { return coeffs_; }
  FFElement coeff(std::int64_t i) const noexcept { return coeffs_[wrap(i)]; }
  void set_coeff(std::int64_t i, FFElement c) { coeffs_[wrap(i)] = c; }
  bool is_zero() const noexcept;

  FFElement eval(FFElement x) const noexcept;

  LinPoly operator+(const LinPoly& rhs) const;
  LinPoly operator-(const LinPoly& rhs) const;
  LinPoly& operator+=(const LinPoly& rhs);
  /// The polynomial c·f(x).
  LinPoly scaled(FFElement c) const;
  bool operator==(const LinPoly& rhs) const;

  /// Coordinates over F_p: n blocks of 2ne power-basis digits.
  std::vector<std::uint32_t> to_fp_vector() const;

 private:
  std::size_t wrap(std::int64_t i) const noexcept;

  TowerPtr tower_;
  std::vector<FFElement> coeffs_;
};

void require_same_tower(const FieldTower& a, const FieldTower& b);

/// f ∘ g: coefficient k is Σ_{i+j≡k} c_i d_j^{q^{2i}}.
LinPoly compose(const LinPoly& f, const LinPoly& g);

/// The adjoint with Tr(x f(y)) = Tr(y f^T(x)), Tr = Tr_{q^{2n}/q^2}: the
/// coefficient at index (n-i) mod n is c_i^{q^{2(n-i)}}.
LinPoly adjoint(const LinPoly& f);

/// Matrix of f over F_{q^2} in the tower's F_{q^2}-basis, row convention:
/// row j holds the coordinates of f(e_j).
FieldMatrix map_matrix(const LinPoly& f);

/// Matrix of f as an F_p-linear map of the ambient field (row j = f(x^j)).
FpMatrix fp_map_matrix(const LinPoly& f);

/// Dimension of the image over F_{q^2}.
std::size_t rank(const LinPoly& f);
/// F_{q^2}-dimension of the kernel: n - rank.
std::size_t kernel_dim(const LinPoly& f);

/// A q-polynomial Σ_{i<2n} a_i x^{q^i} over F_{q^{2n}}; odd exponents allowed.
class QPoly {
 public:
  explicit QPoly(TowerPtr tower);
  QPoly(TowerPtr tower, std::vector<FFElement> coeffs);
  /// The same map as f, written with q-exponents (index 2i for c_i).
  static QPoly from_linpoly(const LinPoly& f);

  const TowerPtr& tower() const noexcept { return tower_; }
  const FieldTower& field() const noexcept { return *tower_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<FFElement>& coeffs() const noexcept { return coeffs_; }
  FFElement coeff(std::int64_t i) const noexcept { return coeffs_[wrap(i)]; }
  void set_coeff(std::int64_t i, FFElement c) { coeffs_[wrap(i)] = c; }
  bool is_zero() const noexcept;

  FFElement eval(FFElement x) const noexcept;
  /// f ∘ x^{q^m}: every exponent shifts by m, coefficients unchanged.
  QPoly compose_monomial(std::int64_t m) const;
  bool operator==(const QPoly& rhs) const;

 private:
  std::size_t wrap(std::int64_t i) const noexcept;

  TowerPtr tower_;
  std::vector<FFElement> coeffs_;
};

FpMatrix fp_map_matrix(const QPoly& f);
/// Kernel dimension over F_q.
std::size_t kernel_dim_fq(const QPoly& f);

/// Smallest k with support ⊆ {0, s, 2s, ..., ks} (exponents mod 2n).
/// Requires gcd(s, 2n) = 1; the zero polynomial has s-degree 0.
std::size_t s_degree(const QPoly& f, std::int64_t s);

/// Outcome of checking the kernel bound for f = a_0 x + ... + a_k x^{q^{sk}}:
/// dim_{F_q} ker f ≤ k, and N(a_0) = (-1)^{2n k} N(a_k) when equality holds.
struct GqReport {
  std::size_t kernel_dim = 0;
  std::size_t k = 0;
  bool bound_holds = false;
  /// Set only when kernel_dim == k.
  std::optional<bool> norm_condition;
};

GqReport gq_verify(const QPoly& f, std::int64_t s, std::size_t k);

/// Rewrites f as the q-polynomial f ∘ x^{q^{s t}} with t ∈ [0, 2n) chosen so the
/// support becomes {0, s, ..., ks} with k as small as possible (least t on
/// ties). Composition with a monomial is invertible, so rank is preserved.
QPoly reindex_to_qpoly(const LinPoly& f, std::int64_t s);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace hermcodes
