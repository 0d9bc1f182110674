#pragma once

// Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^n} ⊂ F_{q^{2n}}.
//
// The whole tower lives in one ambient field F_p[x]/(modulus) of degree
// N = 2ne over F_p; every subfield is a subset of it, never a separate type.
// An element is stored as the integer sum c_0 + c_1 p + ... + c_{N-1} p^{N-1}
// of its power-basis coordinates (constant term least significant).

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace hermcodes {

struct FFElement {
  std::uint32_t value = 0;

  bool is_zero() const noexcept { return value == 0; }
  friend auto operator<=>(const FFElement&, const FFElement&) = default;
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

enum class TableMode { Auto, Never };

class FieldTower {
 public:
  /// Fields with at most this many elements get discrete-log tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// Builds the tower for q = p^e and ambient F_{q^{2n}}.
  ///
  /// Without a modulus the lexicographically-least monic irreducible of degree
  /// 2ne whose root is primitive is used. "Least" compares the non-leading
  /// coefficients as the integer c_0 + c_1 p + ... + c_{N-1} p^{N-1}, i.e. the
  /// x^{N-1} coefficient is most significant. A supplied modulus is given
  /// little-endian (constant term first), must have degree 2ne and must be
  /// irreducible; it is normalised to be monic.
  static TowerPtr make(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                       TableMode tables = TableMode::Auto);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t n() const noexcept { return n_; }
  /// Degree 2ne of the ambient field over F_p.
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Number of elements p^{2ne} of the ambient field.
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  /// Same parameters and modulus.
  bool same_as(const FieldTower& other) const noexcept;

  FFElement zero() const noexcept { return {0}; }
  FFElement one() const noexcept { return {1}; }
  FFElement generator() const noexcept { return generator_; }
  /// The image of an integer in F_p.
  FFElement from_int(std::int64_t c) const noexcept;
  FFElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FFElement x) const;
  /// Checks that value < order().
  FFElement from_value(std::uint64_t value) const;

  FFElement add(FFElement a, FFElement b) const noexcept;
  FFElement sub(FFElement a, FFElement b) const noexcept;
  FFElement neg(FFElement a) const noexcept;
  FFElement mul(FFElement a, FFElement b) const noexcept;
  /// Multiplication by an F_p scalar.
  FFElement scale(FFElement a, std::uint32_t c) const noexcept;
  FFElement inv(FFElement a) const;
  FFElement div(FFElement a, FFElement b) const { return mul(a, inv(b)); }
  FFElement pow(FFElement a, std::uint64_t k) const noexcept;

  /// x^{q^k}; k is reduced modulo 2n, so negative k gives the inverse map.
  FFElement frobenius(FFElement x, std::int64_t k) const noexcept;
  /// x^{p^k}; k is reduced modulo 2ne.
  FFElement frobenius_p(FFElement x, std::int64_t k) const noexcept;

  /// Membership in F_{q^deg}: x^{q^deg} = x. deg must divide 2n.
  bool in_subfield(FFElement x, std::uint32_t deg) const;

  /// Relative trace and norm F_{q^from} -> F_{q^to}.
  FFElement rel_trace(FFElement x, std::uint32_t from_deg, std::uint32_t to_deg) const;
  FFElement rel_norm(FFElement x, std::uint32_t from_deg, std::uint32_t to_deg) const;

  /// Tr_{q^{2n}/q^2}, used everywhere in the Hermitian model.
  FFElement trace_to_q2(FFElement x) const noexcept;
  /// Tr_{F_q/F_p} of an element of F_q, as an integer in [0, p).
  std::uint32_t trace_q_to_p(FFElement x) const;
  /// Quadratic character on F_q^*: true iff x is a nonzero square. q odd.
  bool is_square_in_fq(FFElement x) const;

  /// F_{q^2}-basis {1, g, ..., g^{n-1}} of the ambient field and its
  /// trace-dual basis (Tr_{q^{2n}/q^2}(e_j e*_k) = δ_jk).
  const std::vector<FFElement>& q2_basis() const noexcept { return q2_basis_; }
  const std::vector<FFElement>& q2_dual_basis() const noexcept { return q2_dual_; }

  /// Canonical F_p-basis (RREF coordinates) of F_{q^deg}, deg | 2n.
  const std::vector<FFElement>& subfield_basis(std::uint32_t deg) const;
  /// All elements of F_{q^deg}, in F_p-span order of subfield_basis(deg).
  std::vector<FFElement> subfield_elements(std::uint32_t deg) const;

  /// Discrete log base generator(); requires tables and x != 0.
  std::uint32_t log(FFElement x) const;

 private:
  FieldTower() = default;

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const noexcept;
  FFElement slow_mul(FFElement a, FFElement b) const noexcept;
  FFElement slow_pow(FFElement a, std::uint64_t k) const noexcept;
  void build_tables();
  void build_bases();
  FFElement find_generator() const;

  std::uint32_t p_ = 0, e_ = 0, n_ = 0, degree_ = 0;
  std::uint64_t q_ = 0, order_ = 0;
  std::vector<std::uint32_t> modulus_;  // monic, little-endian, length degree_+1
  FFElement generator_;
  std::vector<std::uint64_t> prime_factors_;  // of order_ - 1

  std::vector<std::uint32_t> exp_, log_, neg_, add_;
  std::vector<std::uint64_t> frob_q_;  // q^k mod (order - 1), k in [0, 2n)
  std::vector<std::uint64_t> frob_p_;  // p^k mod (order - 1), k in [0, 2ne)

  std::vector<FFElement> q2_basis_, q2_dual_;
  std::map<std::uint32_t, std::vector<FFElement>> subfield_bases_;
};

/// Least power g^k of the generator whose norm to F_q is a non-square. q odd.
FFElement find_gamma(const FieldTower& t);
/// Least power g^k of the generator with (g^k)^{q-1} = -1. q odd.
FFElement find_alpha(const FieldTower& t);

bool is_prime(std::uint64_t v);
/// Splits a prime power q into (p, e); throws if q is not one.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

}  // namespace hermcodes
