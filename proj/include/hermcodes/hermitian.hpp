#pragma once

// The space H_n(q^2) of Hermitian forms written as q^2-polynomials:
//
//   { Σ c_i x^{q^{2i}} : c_{(n-i+1) mod n} = c_i^{q^{2n-2i+1}} }.
//
// Codes are additive subgroups, stored by an F_p-basis of generators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermcodes/bigint.hpp"
#include "hermcodes/errors.hpp"
#include "hermcodes/field_matrix.hpp"
#include "hermcodes/fp_matrix.hpp"
#include "hermcodes/linpoly.hpp"
#include "hermcodes/span_enum.hpp"

namespace hermcodes {

/// Hermitian n×n matrix over F_{q^2}: A* = A.
using HermMatrix = FieldMatrix;

/// The index paired with i by the Hermitian condition, (n - i + 1) mod n.
std::size_t hermitian_partner(std::size_t i, std::size_t n);

/// One representative (the smaller index) per orbit of the pairing; for odd n
/// this includes the fixed index (n+1)/2, whose coefficient lies in F_{q^n}.
std::vector<std::size_t> free_indices(std::size_t n);

bool is_hermitian(const LinPoly& f);

/// The unique Hermitian polynomial with the given representative
/// coefficients. Missing representatives are zero.
LinPoly from_free_coeffs(const TowerPtr& tower, const std::map<std::size_t, FFElement>& free);

/// F_p-basis of H_n(q^2): n^2 e elements.
std::vector<LinPoly> hermitian_fp_basis(const TowerPtr& tower);

/// b(f, g) = Tr_{q^{2n}/q^2}(Σ a_i b_i); lands in F_q for Hermitian f, g.
FFElement bilinear_b(const LinPoly& f, const LinPoly& g);

/// Gram matrix G_jk = Tr_{q^{2n}/q^2}(e_k^q f(e_j)) in the tower's F_{q^2}-basis.
/// Hermitian whenever f is, with rank(G) = rank(f).
HermMatrix gram_matrix(const LinPoly& f);

bool is_hermitian_matrix(const FieldTower& t, const FieldMatrix& a);

enum class CodeModel { Poly, Matrix };

class HermCode {
 public:
  /// Generators must be Hermitian and F_p-independent.
  HermCode(TowerPtr tower, std::vector<LinPoly> generators, CodeModel model = CodeModel::Poly,
           std::string label = {}, std::optional<int> declared_d = std::nullopt);

  /// The span of arbitrary Hermitian polynomials; dependent ones are dropped.
  static HermCode span_of(TowerPtr tower, const std::vector<LinPoly>& polys, CodeModel model = CodeModel::Poly,
                          std::string label = {}, std::optional<int> declared_d = std::nullopt);

  const TowerPtr& tower() const noexcept { return tower_; }
  const FieldTower& field() const noexcept { return *tower_; }
  std::size_t n() const noexcept { return tower_->n(); }
  const std::vector<LinPoly>& generators() const noexcept { return generators_; }
  CodeModel model() const noexcept { return model_; }
  const std::string& label() const noexcept { return label_; }
  std::optional<int> declared_d() const noexcept { return declared_d_; }

  HermCode with_label(std::string label) const;
  HermCode with_declared_d(std::optional<int> d) const;

  /// F_p-dimension of the span.
  std::size_t dimension() const noexcept { return generators_.size(); }
  BigInt size() const;
  /// |C| as a machine integer for enumerations; throws BudgetExceeded above budget.
  std::uint64_t enumeration_size(std::uint64_t budget) const;

  bool contains(const LinPoly& f) const;
  bool same_span(const HermCode& other) const;
  /// Rows = generators as F_p vectors.
  FpMatrix generator_matrix() const;
  /// Canonical F_p-basis (RREF rows) of the span.
  const FpMatrix& rref_basis() const noexcept { return rref_; }

  /// Visits every codeword once (zero first), in odometer order of the generators.
  template <typename Visit>
  void for_each_codeword(Visit&& visit, std::uint64_t budget = kDefaultBudget) const;

 private:
  TowerPtr tower_;
  std::vector<LinPoly> generators_;
  CodeModel model_;
  std::string label_;
  std::optional<int> declared_d_;
  FpMatrix rref_;
  std::vector<std::size_t> pivots_;
};

HermCode full_space(const TowerPtr& tower);
HermCode zero_code(const TowerPtr& tower);

/// C^⊥ = { f ∈ H_n(q^2) : Tr_{F_q/F_p}(b(f, g)) = 0 for all g ∈ C }.
/// For F_q-linear C this is exactly { f : b(f, g) = 0 }.
HermCode dual_code(const HermCode& c);

/// The Hermitian polynomial whose Gram matrix is the given matrix.
LinPoly matrix_to_poly(const TowerPtr& tower, const HermMatrix& a);

/// The additive code spanned by Hermitian matrices, in the matrix model.
HermCode code_from_matrix_set(const TowerPtr& tower, const std::vector<HermMatrix>& matrices,
                              std::string label = {}, std::optional<int> declared_d = std::nullopt);

/// Histogram of ranks (index 0..n) of the listed matrices, by elimination over F_{q^2}.
std::vector<std::uint64_t> matrix_code_rank_distribution(const FieldTower& t, const std::vector<HermMatrix>& matrices);

template <typename Visit>
void HermCode::for_each_codeword(Visit&& visit, std::uint64_t budget) const {
  enumeration_size(budget);
  enumerate_span(
      tower_->p(), generators_, LinPoly(tower_), [](LinPoly& acc, const LinPoly& g) { acc += g; },
      std::forward<Visit>(visit));
}

}  // namespace hermcodes

