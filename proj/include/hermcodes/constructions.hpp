#pragma once

// The code families H_{n,d,s}, E_{n,d,s}, the zero-diagonal matrix code M,
// the 2-code H̃_s and the closed form of its dual.
//
// Every family is F_q-linear in a handful of parameters, each ranging over a
// subfield F_{q^k} of the ambient field. A "slot" is one such parameter; the
// F_p-generators of a code are the slot maps applied to an F_p-basis of the
// slot's domain.
//
// For s != 1 the literal formulas satisfy the Hermitian condition only for
// the q^s-twisted conjugation. The builders compose on the right with
// x^{q^{2t}}, t = (1 - s)/2 mod n, which lands in H_n(q^2) and preserves
// ranks and the form b.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hermcodes/hermitian.hpp"

namespace hermcodes {

enum class Family { H, E, M, Htilde, HtildeDual };

std::string family_name(Family f);
/// Accepts H, E, M, Htilde, HtildeDual (case-sensitive).
Family parse_family(const std::string& name);

struct ConstructionParams {
  Family family = Family::H;
  std::uint64_t q = 2;
  std::uint32_t n = 3;
  /// Ignored by M, Htilde and HtildeDual, whose d is fixed.
  std::uint32_t d = 2;
  std::int64_t s = 1;
  /// Htilde only; defaults to find_gamma.
  std::optional<FFElement> gamma;
  /// HtildeDual only; defaults to find_alpha.
  std::optional<FFElement> alpha;
  /// Optional explicit modulus for the tower.
  std::optional<std::vector<std::uint32_t>> modulus;
};

/// Throws std::invalid_argument naming the violated hypothesis.
void validate(const ConstructionParams& params);

struct Slot {
  /// The parameter ranges over F_{q^domain_degree}.
  std::uint32_t domain_degree = 0;
  std::function<LinPoly(FFElement)> map;
};

/// The tower for the parameters (p, e from q; ambient F_{q^{2n}}).
TowerPtr tower_for(const ConstructionParams& params);

/// Parameter slots of a polynomial family (not M). The slot maps already
/// include the s-normalisation.
std::vector<Slot> family_slots(const TowerPtr& tower, const ConstructionParams& params);

/// Right composition with x^{q^{2t}} moving the s-twisted family into H_n(q^2).
std::int64_t normalising_shift(std::int64_t s, std::uint32_t n);

HermCode build_H(const TowerPtr& tower, const ConstructionParams& params);
HermCode build_E(const TowerPtr& tower, const ConstructionParams& params);
HermCode build_M(const TowerPtr& tower);
HermCode build_Htilde(const TowerPtr& tower, const ConstructionParams& params);
HermCode build_Htilde_dual(const TowerPtr& tower, const ConstructionParams& params);

/// Dispatches on params.family.
HermCode build(const TowerPtr& tower, const ConstructionParams& params);

/// Checks f(λa + b) = λ f(a) + f(b) on random λ ∈ F_q and a, b in the slot domain.
bool slot_is_fq_linear(const FieldTower& t, const Slot& slot, std::size_t trials, std::uint64_t seed);

}  // namespace hermcodes
