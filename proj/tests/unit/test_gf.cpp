#include "doctest.h"
#include "support.hpp"

using namespace hermcodes;
using namespace testsupport;

TEST_CASE("towers are deterministic and have the right size") {
  auto a = tower(2, 1, 3), b = tower(2, 1, 3);
  CHECK(a->order() == 64);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->generator() == b->generator());
  CHECK(tower(3, 1, 3)->order() == 729);
  CHECK(tower(2, 2, 2)->q() == 4);
}

TEST_CASE("reducible modulus and non-prime p are rejected") {
  // x^6 + x^4 + x^2 + 1 = (x^3 + x^2 + x + 1)^2 over F_2
  CHECK_THROWS_AS(FieldTower::make(2, 1, 3, std::vector<std::uint32_t>{1, 0, 1, 0, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FieldTower::make(4, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(FieldTower::make(2, 1, 3, std::vector<std::uint32_t>{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("generator is primitive") {
  for (auto t : {tower(2, 1, 3), tower(3, 1, 3), tower(2, 2, 2)}) {
    const FFElement g = t->generator();
    FFElement x = g;
    std::uint64_t order = 1;
    while (x != t->one()) {
      x = t->mul(x, g);
      ++order;
    }
    CHECK(order == t->order() - 1);
  }
}

TEST_CASE("field axioms against the slow path") {
  auto fast = tower(3, 1, 3);
  auto slow = FieldTower::make(3, 1, 3, std::nullopt, TableMode::Never);
  REQUIRE(fast->has_tables());
  REQUIRE_FALSE(slow->has_tables());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const FFElement a = random_element(*fast, rng), b = random_element(*fast, rng);
    CHECK(fast->mul(a, b) == slow->mul(a, b));
    CHECK(fast->add(a, b) == slow->add(a, b));
    if (!a.is_zero()) CHECK(fast->mul(a, fast->inv(a)) == fast->one());
  }
}

TEST_CASE("frobenius") {
  auto t = tower(2, 1, 3);
  const FFElement g = t->generator();
  CHECK(t->frobenius(g, 6) == g);
  CHECK(t->frobenius(g, 1) == t->mul(g, g));
  for (std::uint64_t v = 0; v < t->order(); ++v) {
    const FFElement x = t->from_value(v);
    CHECK(t->frobenius(t->frobenius(x, 2), 3) == t->frobenius(x, 5));
    CHECK(t->frobenius(x, -1) == t->frobenius(x, 5));
    CHECK(t->frobenius_p(x, 6) == x);
  }
  auto t3 = tower(3, 1, 3);
  for (FFElement x : t3->subfield_elements(1)) CHECK(t3->frobenius(x, 4) == x);
}

TEST_CASE("subfield cardinalities") {
  for (auto t : {tower(2, 1, 3), tower(3, 1, 3)}) {
    const std::uint64_t q = t->q();
    for (std::uint32_t k : {1u, 2u, 3u, 6u}) {
      std::uint64_t count = 0;
      for (std::uint64_t v = 0; v < t->order(); ++v) count += t->in_subfield(t->from_value(v), k);
      std::uint64_t expect = 1;
      for (std::uint32_t i = 0; i < k; ++i) expect *= q;
      CHECK(count == expect);
      CHECK(t->subfield_elements(k).size() == expect);
    }
  }
}

TEST_CASE("trace is additive and norm multiplicative") {
  for (auto t : {tower(2, 1, 3), tower(3, 1, 3)}) {
    std::mt19937_64 rng(3);
    CHECK(t->rel_trace(t->zero(), 6, 2) == t->zero());
    CHECK(t->rel_norm(t->one(), 6, 1) == t->one());
    for (int i = 0; i < 500; ++i) {
      const FFElement a = random_element(*t, rng), b = random_element(*t, rng);
      CHECK(t->rel_trace(t->add(a, b), 6, 2) == t->add(t->rel_trace(a, 6, 2), t->rel_trace(b, 6, 2)));
      CHECK(t->rel_norm(t->mul(a, b), 6, 1) == t->mul(t->rel_norm(a, 6, 1), t->rel_norm(b, 6, 1)));
      CHECK(t->in_subfield(t->rel_trace(a, 6, 3), 3));
      CHECK(t->in_subfield(t->rel_norm(a, 6, 1), 1));
    }
    CHECK_THROWS_AS(t->rel_trace(t->one(), 6, 4), std::invalid_argument);
  }
}

TEST_CASE("find_gamma and find_alpha") {
  auto t = tower(3, 1, 3);
  const FFElement gamma = find_gamma(*t);
  const FFElement norm = t->rel_norm(gamma, 6, 1);
  CHECK(norm == t->from_int(2));
  CHECK_FALSE(t->is_square_in_fq(norm));
  // least power with that property
  FFElement x = t->one();
  while (t->is_square_in_fq(t->rel_norm(x, 6, 1))) x = t->mul(x, t->generator());
  CHECK(x == gamma);

  const FFElement alpha = find_alpha(*t);
  CHECK(t->pow(alpha, 2) == t->neg(t->one()));
  CHECK(t->pow(alpha, 4) == t->one());
  CHECK(t->in_subfield(alpha, 2));

  auto even = tower(2, 1, 3);
  CHECK_THROWS_AS(find_gamma(*even), std::invalid_argument);
  CHECK_THROWS_AS(find_alpha(*even), std::invalid_argument);
}

TEST_CASE("q2 basis and its trace dual") {
  auto t = tower(3, 1, 3);
  const auto& e = t->q2_basis();
  const auto& d = t->q2_dual_basis();
  REQUIRE(e.size() == 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(t->trace_to_q2(t->mul(e[j], d[k])) == (j == k ? t->one() : t->zero()));
}

TEST_CASE("coefficient round trip and prime powers") {
  auto t = tower(3, 1, 3);
  for (std::uint64_t v = 0; v < t->order(); v += 7) {
    const FFElement x = t->from_value(v);
    CHECK(t->from_coeffs(t->coeffs(x)) == x);
  }
  CHECK(split_prime_power(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
  CHECK(split_prime_power(5) == std::pair<std::uint32_t, std::uint32_t>{5, 1});
  CHECK_THROWS_AS(split_prime_power(6), std::invalid_argument);
}
