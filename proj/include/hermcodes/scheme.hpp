#pragma once

// The Hermitian association scheme: rank distributions, character sums and
// designs. Everything is exact; character values live in Z[ζ_p].

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hermcodes/bigint.hpp"
#include "hermcodes/errors.hpp"
#include "hermcodes/hermitian.hpp"

namespace hermcodes {

/// Element of Z[ζ_p] stored as coefficients of 1, ζ, ..., ζ^{p-1}, kept
/// canonical by forcing the ζ^{p-1} coordinate to zero (Σ ζ^j = 0).
class CycloInt {
 public:
  explicit CycloInt(std::uint32_t p);
  static CycloInt zeta_power(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }

  CycloInt& add_zeta_power(std::uint32_t k, const BigInt& times = 1);
  CycloInt& operator+=(const CycloInt& rhs);
  bool operator==(const CycloInt& rhs) const { return p_ == rhs.p_ && coords_ == rhs.coords_; }

  bool is_integer() const;
  /// Requires is_integer().
  BigInt to_integer() const;

 private:
  void normalise();

  std::uint32_t p_;
  std::vector<BigInt> coords_;
};

/// χ(x) = ζ^{Tr_{F_q/F_p}(x)} for x ∈ F_q.
CycloInt char_value(const FieldTower& t, FFElement x);
/// Tr_{F_q/F_p}(tr(A* B)), the exponent of ⟨A, B⟩.
std::uint32_t pairing_exponent(const FieldTower& t, const HermMatrix& a, const HermMatrix& b);
/// ⟨A, B⟩ = χ(tr(A* B)).
CycloInt pairing(const FieldTower& t, const HermMatrix& a, const HermMatrix& b);

/// F_p-basis of the size×size Hermitian matrices: diagonal F_q slots, then
/// off-diagonal F_{q^2} slots (row-major upper triangle).
std::vector<HermMatrix> hermitian_matrix_basis(const FieldTower& t, std::size_t size);

struct Eigenvalues {
  std::size_t n = 0;
  /// q[k][i] = Q_k(i).
  std::vector<std::vector<BigInt>> q;
};

/// Q_k(i) by summing over every Hermitian matrix, for two representatives of
/// each rank i; throws std::logic_error if they disagree or a value is not an integer.
Eigenvalues eigenvalues(const TowerPtr& tower, std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 1);

/// Rank histogram of C (A_0..A_n). For an additive code this is the inner distribution.
std::vector<BigInt> inner_distribution(const HermCode& c, std::uint64_t budget = kDefaultBudget);

/// |{(X, Y) ∈ S×S : rk(X - Y) = i}| / |S| for an arbitrary set of Hermitian matrices.
std::vector<BigRational> inner_distribution_pairwise(const FieldTower& t, const std::vector<HermMatrix>& set);

enum class DualMethod { DualCode, Eigenvalues, Both };

/// A'_0..A'_n. With Both, the two methods are run and compared; a mismatch throws std::logic_error.
std::vector<BigInt> dual_inner_distribution(const HermCode& c, DualMethod method = DualMethod::DualCode,
                                            std::uint64_t budget = kDefaultBudget);

/// Σ_k Q_k(i) A_i for a given table and inner distribution.
std::vector<BigInt> eigen_transform(const Eigenvalues& e, const std::vector<BigInt>& inner);

/// Gaussian binomial at -q. Zero when l > m.
BigInt neg_q_binom(int m, int l, std::int64_t q);

/// Predicted A_0..A_n of a code of the given size and minimum distance d.
/// Throws std::domain_error if a coordinate is not an integer.
std::vector<BigInt> theorem3_distribution(int n, int d, std::int64_t q, const BigInt& size);

/// Smallest nonzero rank, or 0 for the zero code.
int min_distance(const std::vector<BigInt>& inner);

/// Largest t with A'_1 = ... = A'_t = 0.
int design_strength(const std::vector<BigInt>& dual_inner);
int design_strength(const HermCode& c, std::uint64_t budget = kDefaultBudget);

/// |C| = q^{n(n-d+1)}.
bool bound_saturated(const HermCode& c, int d);

/// Row-reduced t×n matrices over F_{q^2}, one per t-dimensional subspace,
/// pivot sets in lexicographic order (so ⟨(1,0,...,0)⟩ comes first for t = 1).
std::vector<FieldMatrix> subspaces(const FieldTower& t, std::size_t dim, std::uint64_t budget = kDefaultBudget);

/// Restriction R G R* of a form to the row space of R.
HermMatrix restrict_form(const FieldTower& t, const HermMatrix& g, const FieldMatrix& r);

/// Number of codewords whose Gram restriction to U equals each t×t Hermitian H.
/// Keys are the entry values row-major; absent keys have count 0.
using ExtensionCounts = std::map<std::vector<std::uint32_t>, std::uint64_t>;
ExtensionCounts extension_counts(const HermCode& c, const FieldMatrix& u, std::uint64_t budget = kDefaultBudget);

struct ExtensionReport {
  bool uniform = true;
  std::size_t t = 0;
  std::uint64_t subspaces_checked = 0;
  /// Count every (U, H) should have if uniform: |C| / q^{t^2}.
  BigRational expected;
  /// On failure: the subspace and two forms with different counts.
  std::optional<FieldMatrix> witness_u;
  std::optional<HermMatrix> witness_h_high, witness_h_low;
  std::uint64_t count_high = 0, count_low = 0;
};

ExtensionReport design_by_extension_count(const HermCode& c, std::size_t t, std::uint64_t budget = kDefaultBudget);

}  // namespace hermcodes
