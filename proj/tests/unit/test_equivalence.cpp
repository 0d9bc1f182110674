#include "doctest.h"
#include "support.hpp"

#include "hermcodes/constructions.hpp"
#include "hermcodes/equivalence.hpp"

using namespace hermcodes;
using namespace testsupport;

namespace {

HermCode make(Family f, std::uint64_t q, std::uint32_t n = 3, std::uint32_t d = 2) {
  ConstructionParams p;
  p.family = f;
  p.q = q;
  p.n = n;
  p.d = d;
  return build(tower_for(p), p);
}

std::size_t brute_unique(const SupportSet& a, const SupportSet& b, std::size_t n, std::size_t k) {
  std::size_t hits = 0;
  for (auto i : a)
    for (auto j : b) hits += (i + j) % n == k;
  return hits;
}

}  // namespace

TEST_CASE("kernel of maximum codes") {
  for (Family f : {Family::H, Family::Htilde}) {
    const auto c = make(f, 3);
    const auto k = kernel_K(c);
    CHECK(k.order == 9);
    CHECK(k.is_field);
    CHECK(k.closed);
    CHECK(k.invertible);
    for (FFElement a : c.field().subfield_elements(2)) CHECK(endo_contains(k, scalar_endo(c.tower(), a)));
  }
}

TEST_CASE("kernel always contains the F_{q^2} scalars") {
  for (auto c : {full_space(tower(3, 1, 3)), make(Family::H, 2), make(Family::M, 2), make(Family::E, 2, 3, 3)}) {
    const auto k = kernel_K(c);
    for (FFElement a : c.field().subfield_elements(2)) CHECK(endo_contains(k, scalar_endo(c.tower(), a)));
  }
}

TEST_CASE("kernel of a one-word code is larger") {
  auto t = tower(3, 1, 3);
  const HermCode c(t, {from_free_coeffs(t, {{0, t->one()}})});
  REQUIRE(rank(c.generators()[0]) == 3);
  CHECK(kernel_K(c).order > 9);
}

TEST_CASE("idealisers") {
  for (Family f : {Family::H, Family::Htilde}) {
    const auto c = make(f, 3);
    const auto l = left_idealiser(c), r = right_idealiser(c);
    CHECK(l.order == 3);
    CHECK(r.order == 3);
    CHECK(l.scalar.value_or(false));
    CHECK(r.scalar.value_or(false));
  }
  // Z X is Hermitian for every Hermitian X only when Z is an F_q scalar
  const auto full = left_idealiser(full_space(tower(3, 1, 3)));
  CHECK(full.order == 3);
  CHECK(full.scalar.value_or(false));
}

TEST_CASE("supports") {
  auto t = tower(2, 1, 3);
  CHECK(universal_support(zero_code(t)).empty());
  CHECK(universal_support(full_space(t)) == SupportSet{0, 1, 2});
  CHECK(universal_support(make(Family::H, 2)) == SupportSet{0, 1});
  CHECK(universal_support(make(Family::Htilde, 3)) == SupportSet{0, 1, 2});

  CHECK(a_pow_b({0}, {0, 1}, 3) == SupportSet{0, 1});
  CHECK(a_pow_b({0, 1}, {0, 1}, 3) == SupportSet{0, 2});
  CHECK(a_pow_b({}, {0, 1}, 3).empty());
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    SupportSet a, b;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1) a.insert(i);
      if (rng() & 1) b.insert(i);
    }
    const auto ab = a_pow_b(a, b, n);
    CHECK(ab == a_pow_b(b, a, n));
    for (std::size_t k = 0; k < n; ++k) CHECK(ab.contains(k) == (brute_unique(a, b, n, k) == 1));
  }
  CHECK(support_containment({0}, {0, 1}, {0, 1}, 3));
  CHECK_FALSE(support_containment({0, 1}, {0, 1}, {0}, 3));
}

TEST_CASE("independent support witnesses") {
  const auto h = make(Family::H, 2);
  auto t = h.tower();
  CHECK(check_independent_support(h, {}, {}, 6).holds);
  // b ↦ b x + b^q x^{q^2}: the parameter slice of H_{3,2,1}
  SupportWitness w{{0, [](FFElement b) { return b; }}, {1, [t](FFElement b) { return t->frobenius(b, 1); }}};
  CHECK(check_independent_support(h, {0, 1}, w, 6).holds);
  SupportWitness constant{{0, [t](FFElement) { return t->one(); }}, {1, [t](FFElement) { return t->one(); }}};
  CHECK_FALSE(check_independent_support(h, {0, 1}, constant, 6).holds);
  SupportWitness wrong{{0, [](FFElement b) { return b; }}, {1, [](FFElement b) { return b; }}};
  CHECK_FALSE(check_independent_support(h, {0, 1}, wrong, 6).holds);
  CHECK_THROWS_AS(check_independent_support(h, {0, 1}, w, 4), std::invalid_argument);
}

TEST_CASE("fingerprints") {
  const auto m = make(Family::M, 2), h = make(Family::H, 2);
  const auto fm = invariant_fingerprint(m), fh = invariant_fingerprint(h);
  CHECK(fm == invariant_fingerprint(m));
  const auto cmp = compare_fingerprints(fm, fh);
  CHECK(cmp.verdict == "inequivalent");
  CHECK(std::find(cmp.differences.begin(), cmp.differences.end(), "design_strength") != cmp.differences.end());

  const auto h3 = make(Family::H, 3), ht = make(Family::Htilde, 3);
  const auto same = compare_fingerprints(invariant_fingerprint(h3), invariant_fingerprint(ht));
  CHECK(same.verdict == "inconclusive");
  CHECK(same.differences.empty());
}
