#pragma once

// Equivalence invariants: the kernel K(C), the idealisers, supports of
// polynomial codes, and a fingerprint that can certify inequivalence.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hermcodes/bigint.hpp"
#include "hermcodes/hermitian.hpp"

namespace hermcodes {

/// An F_p-subspace of endomorphisms, each given by one or more blocks acting
/// on row vectors of F_{q^2}^n ≅ F_p^{2ne}.
struct EndoSolution {
  std::vector<std::vector<FpMatrix>> basis;
  std::size_t dimension = 0;
  BigInt order = 1;
  /// Closed under blockwise products.
  bool closed = false;
  /// Every nonzero element checked was invertible.
  bool invertible = false;
  /// Whether invertibility was checked on every element or on a sample.
  bool exhaustive = false;
  bool is_field = false;
  /// Kernel only, when the identity map is a codeword: every element has N1 = N2.
  std::optional<bool> blocks_equal;
  /// Idealisers only: every element is λI with λ ∈ F_q.
  std::optional<bool> scalar;
};

/// {(N1, N2) : N1 M_X = M_X N2 for every generator X}, M_X the F_p-matrix of X.
EndoSolution kernel_K(const HermCode& c);

/// {Z : Z X ∈ C for all X ∈ C} over the Gram matrices of C.
EndoSolution left_idealiser(const HermCode& c);
/// {Z : X Z ∈ C for all X ∈ C}.
EndoSolution right_idealiser(const HermCode& c);

/// Membership of a block tuple in the solution space.
bool endo_contains(const EndoSolution& sol, const std::vector<FpMatrix>& element);

/// (N1, N2) for multiplication by a, as F_p matrices on row vectors.
std::vector<FpMatrix> scalar_endo(const TowerPtr& tower, FFElement a);

using SupportSet = std::set<std::size_t>;

/// Indices i (q^2-exponents) with a nonzero x^{q^{2i}} coefficient somewhere in C.
SupportSet universal_support(const HermCode& c);

/// Residues k mod n hit by exactly one pair (i, j) ∈ A×B with i + j ≡ k.
SupportSet a_pow_b(const SupportSet& a, const SupportSet& b, std::size_t n);

/// A^B ⊆ S.
bool support_containment(const SupportSet& a, const SupportSet& b, const SupportSet& s, std::size_t n);

using SupportWitness = std::map<std::size_t, std::function<FFElement(FFElement)>>;

struct IndependentSupportReport {
  bool holds = false;
  std::string reason;
};

/// Checks that each h_i permutes F_{q^domain_degree} and that
/// Σ_{i ∈ B} h_i(a) x^{q^{2i}} ∈ C for every a in that domain.
IndependentSupportReport check_independent_support(const HermCode& c, const SupportSet& b,
                                                   const SupportWitness& witness, std::uint32_t domain_degree);

struct Fingerprint {
  BigInt size;
  std::vector<BigInt> inner, dual_inner;
  int design_strength = 0;
  BigInt kernel_order, left_order, right_order;
  /// Reported only; not an equivalence invariant.
  std::size_t support_size = 0;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint invariant_fingerprint(const HermCode& c, std::uint64_t budget = kDefaultBudget);

struct FingerprintComparison {
  /// "inequivalent" or "inconclusive".
  std::string verdict;
  std::vector<std::string> differences;
};

FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

}  // namespace hermcodes
