#include "doctest.h"
#include "support.hpp"

#include "hermcodes/constructions.hpp"
#include "hermcodes/equivalence.hpp"
#include "hermcodes/scheme.hpp"

using namespace hermcodes;
using namespace testsupport;

namespace {

ConstructionParams params(Family f, std::uint64_t q, std::uint32_t n, std::uint32_t d = 2, std::int64_t s = 1) {
  ConstructionParams p;
  p.family = f;
  p.q = q;
  p.n = n;
  p.d = d;
  p.s = s;
  return p;
}

HermCode make(const ConstructionParams& p) { return build(tower_for(p), p); }

BigInt qpow(std::uint64_t q, unsigned k) { return big_pow(BigInt(q), k); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(params(Family::H, 2, 4, 2, 2)), std::invalid_argument);  // s even
  CHECK_THROWS_AS(validate(params(Family::H, 2, 3, 3, 1)), std::invalid_argument);  // same parity
  CHECK_THROWS_AS(validate(params(Family::H, 2, 3, 2, 3)), std::invalid_argument);  // gcd(s, n) = 3
  CHECK_THROWS_AS(validate(params(Family::E, 2, 3, 2, 1)), std::invalid_argument);  // d even
  CHECK_THROWS_AS(validate(params(Family::Htilde, 2, 3)), std::invalid_argument);   // q even
  CHECK_THROWS_AS(validate(params(Family::Htilde, 3, 4)), std::invalid_argument);   // n even
  CHECK_THROWS_AS(validate(params(Family::H, 6, 3)), std::invalid_argument);        // not a prime power
  CHECK_THROWS_AS(parse_family("X"), std::invalid_argument);
  for (Family f : {Family::H, Family::E, Family::M, Family::Htilde, Family::HtildeDual})
    CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("H family") {
  for (std::uint64_t q : {2, 3}) {
    const auto h = make(params(Family::H, q, 3));
    CHECK(h.size() == qpow(q, 6));
    CHECK(h.dimension() == (q == 2 ? 6u : 6u));
    CHECK(h.declared_d() == 2);
    for (const auto& g : h.generators()) CHECK(is_hermitian(g));
    CHECK(min_distance(inner_distribution(h)) == 2);
    CHECK(design_strength(h) >= 2);
    CHECK(bound_saturated(h, 2));
  }
}

TEST_CASE("H dual has the expected shape") {
  // the dual of H_{3,2,1} is { c x^{q^4} : c ∈ F_{q^3} }: only the fixed index survives
  for (std::uint64_t q : {2, 3}) {
    const auto h = make(params(Family::H, q, 3));
    const auto d = dual_code(h);
    CHECK(d.size() == qpow(q, 3));
    auto t = h.tower();
    for (FFElement c : t->subfield_basis(3)) CHECK(d.contains(LinPoly::monomial(t, c, 2)));
  }
}

TEST_CASE("E family") {
  for (std::uint64_t q : {2, 3}) {
    const auto e = make(params(Family::E, q, 3, 3));
    CHECK(e.size() == qpow(q, 3));
    CHECK(min_distance(inner_distribution(e)) == 3);
    CHECK(design_strength(e) >= 1);
  }
  const auto e5 = make(params(Family::E, 2, 5, 3));
  CHECK(e5.size() == qpow(2, 15));
  for (const auto& g : e5.generators()) CHECK(is_hermitian(g));
}

TEST_CASE("M family") {
  for (std::uint64_t q : {2, 3}) {
    const auto m = make(params(Family::M, q, 3));
    CHECK(m.size() == qpow(q, 6));
    CHECK(m.model() == CodeModel::Matrix);
    CHECK(min_distance(inner_distribution(m)) == 2);
    CHECK(design_strength(m) == 0);
    m.for_each_codeword([&](const LinPoly& f) {
      const auto g = gram_matrix(f);
      for (std::size_t i = 0; i < 3; ++i) CHECK(g(i, i).is_zero());
    });
  }
}

TEST_CASE("Htilde and its dual") {
  for (std::uint64_t q : {3, 5}) {
    const auto h = make(params(Family::Htilde, q, 3));
    CHECK(h.size() == qpow(q, 6));
    for (const auto& g : h.generators()) CHECK(is_hermitian(g));
    if (q == 3) {
      CHECK(min_distance(inner_distribution(h)) == 2);
      CHECK(design_strength(h) >= 2);
    }
  }
  const auto p = params(Family::Htilde, 3, 3);
  auto t = tower_for(p);
  const auto h = build_Htilde(t, p);
  const auto hd = build_Htilde_dual(t, p);
  CHECK(hd.size() == 27);
  CHECK(dual_code(h).same_span(hd));
  hd.for_each_codeword([&](const LinPoly& f) {
    if (!f.is_zero()) CHECK(rank(f) == 3);
  });
}

TEST_CASE("s-normalisation keeps the codes equivalent") {
  CHECK(normalising_shift(1, 3) == 0);
  for (std::int64_t s : {5, 7}) {
    const auto p = params(Family::H, 2, 3, 2, s);
    const auto h = make(p);
    for (const auto& g : h.generators()) CHECK(is_hermitian(g));
    CHECK(inner_distribution(h) == inner_distribution(make(params(Family::H, 2, 3))));
    CHECK(design_strength(h) >= 2);
  }
  const auto ht = make(params(Family::Htilde, 3, 3, 2, 5));
  for (const auto& g : ht.generators()) CHECK(is_hermitian(g));
  CHECK(min_distance(inner_distribution(ht)) == 2);
}

TEST_CASE("slots are F_q-linear") {
  for (auto p : {params(Family::H, 3, 3), params(Family::E, 3, 3, 3), params(Family::Htilde, 3, 3),
                 params(Family::HtildeDual, 3, 3), params(Family::H, 4, 3)}) {
    auto t = tower_for(p);
    for (const auto& slot : family_slots(t, p)) CHECK(slot_is_fq_linear(*t, slot, 50, 1));
  }
}

TEST_CASE("explicit gamma") {
  auto p = params(Family::Htilde, 3, 3);
  auto t = tower_for(p);
  p.gamma = t->one();  // norm 1 is a square
  CHECK_THROWS_AS(build(t, p), std::invalid_argument);
  p.gamma = t->pow(find_gamma(*t), 3);
  CHECK(build(t, p).size() == 729);
}

TEST_CASE("polynomials with a gamma-twisted top coefficient have small kernels") {
  // a x + Σ_{i=1}^{k-1} a_i x^{q^{is}} + γ b x^{q^{sk}}, a, b ∈ F_{q^n}
  auto t = tower(3, 1, 3);
  const FFElement gamma = find_gamma(*t);
  const auto small = t->subfield_elements(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    QPoly f(t);
    f.set_coeff(0, small[rng() % small.size()]);
    for (std::size_t i = 1; i < k; ++i) f.set_coeff(static_cast<std::int64_t>(i), random_element(*t, rng));
    f.set_coeff(static_cast<std::int64_t>(k), t->mul(gamma, small[rng() % small.size()]));
    if (f.is_zero()) continue;
    CHECK(kernel_dim_fq(f) + 1 <= k);
  }
}
