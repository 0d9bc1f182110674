#include "doctest.h"
#include "support.hpp"

#include <set>
#include <tuple>

#include "hermcodes/hermitian.hpp"

using namespace hermcodes;
using namespace testsupport;

namespace {

std::vector<LinPoly> all_members(const TowerPtr& t) {
  std::vector<LinPoly> out;
  full_space(t).for_each_codeword([&](const LinPoly& f) { out.push_back(f); });
  return out;
}

}  // namespace

TEST_CASE("membership") {
  auto t = tower(2, 1, 3);
  CHECK(is_hermitian(LinPoly(t)));
  CHECK_FALSE(is_hermitian(LinPoly::monomial(t, t->one(), 1)));
  const FFElement c0 = t->generator();
  const FFElement c2 = t->subfield_elements(3)[3];
  LinPoly f(t);
  f.set_coeff(0, c0);
  f.set_coeff(1, t->frobenius(c0, 1));
  f.set_coeff(2, c2);
  CHECK(is_hermitian(f));
  f.set_coeff(2, t->generator());  // fixed index outside F_{q^3}
  CHECK_FALSE(is_hermitian(f));
}

TEST_CASE("free coefficients") {
  auto t = tower(2, 1, 3);
  CHECK(free_indices(3) == std::vector<std::size_t>{0, 2});
  CHECK(hermitian_partner(0, 3) == 1);
  CHECK(hermitian_partner(2, 3) == 2);
  CHECK(from_free_coeffs(t, {}).is_zero());
  LinPoly expect(t);
  expect.set_coeff(0, t->one());
  expect.set_coeff(1, t->one());
  CHECK(from_free_coeffs(t, {{0, t->one()}}) == expect);
  CHECK_THROWS_AS(from_free_coeffs(t, {{2, t->generator()}}), std::invalid_argument);
}

TEST_CASE("size of the Hermitian space") {
  for (auto [p, e, n, size] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 2, 16}, {2, 1, 3, 512}, {3, 1, 3, 19683}}) {
    auto t = tower(p, e, n);
    CHECK(hermitian_fp_basis(t).size() == static_cast<std::size_t>(n * n * e));
    CHECK(full_space(t).size() == size);
    std::size_t count = 0;
    full_space(t).for_each_codeword([&](const LinPoly& f) { count += is_hermitian(f); });
    CHECK(count == static_cast<std::size_t>(size));
  }
}

TEST_CASE("closure under F_q but not F_{q^2} scalars") {
  auto t = tower(2, 1, 3);
  const auto members = all_members(t);
  const FFElement w = t->subfield_elements(2)[2];  // in F_4 \ F_2
  REQUIRE_FALSE(t->in_subfield(w, 1));
  bool witness = false;
  for (const auto& f : members) {
    CHECK(is_hermitian(f.scaled(t->one())));
    witness = witness || !is_hermitian(f.scaled(w));
  }
  CHECK(witness);
  CHECK(is_hermitian(members[5] + members[77]));
}

TEST_CASE("bilinear form") {
  auto t = tower(2, 1, 3);
  const auto members = all_members(t);
  for (std::size_t i = 0; i < members.size(); i += 3) {
    CHECK(bilinear_b(members[i], LinPoly(t)) == t->zero());
    for (std::size_t j = 0; j < members.size(); j += 5) {
      const FFElement v = bilinear_b(members[i], members[j]);
      CHECK(v == bilinear_b(members[j], members[i]));
      CHECK(t->in_subfield(v, 1));
    }
  }
  // non-degenerate: only 0 pairs to zero with everything
  std::size_t radical = 0;
  for (const auto& f : members) {
    bool all_zero = true;
    for (const auto& g : hermitian_fp_basis(t)) all_zero = all_zero && bilinear_b(f, g).is_zero();
    radical += all_zero;
  }
  CHECK(radical == 1);
}

TEST_CASE("gram matrices are Hermitian, rank preserving and bijective") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    auto t = tower(p, 1, n);
    std::set<std::vector<FFElement>> images;
    std::size_t count = 0;
    full_space(t).for_each_codeword([&](const LinPoly& f) {
      const auto g = gram_matrix(f);
      CHECK(is_hermitian_matrix(*t, g));
      CHECK(mat_rank(*t, g) == rank(f));
      CHECK(matrix_to_poly(t, g) == f);
      images.insert(g.entries());
      ++count;
    });
    CHECK(images.size() == count);
  }
  auto t = tower(2, 1, 3);
  CHECK(gram_matrix(LinPoly(t)).is_zero());
}

TEST_CASE("dual codes") {
  auto t = tower(2, 1, 3);
  const auto full = full_space(t), zero = zero_code(t);
  CHECK(dual_code(full).size() == 1);
  CHECK(dual_code(zero).same_span(full));
  // a random 4-dimensional subcode
  std::mt19937_64 rng(9);
  const auto basis = hermitian_fp_basis(t);
  std::vector<LinPoly> gens;
  for (int i = 0; i < 4; ++i) {
    LinPoly f(t);
    for (const auto& b : basis)
      if (rng() & 1) f += b;
    gens.push_back(f);
  }
  const auto c = HermCode::span_of(t, gens);
  const auto d = dual_code(c);
  CHECK(c.size() * d.size() == full.size());
  CHECK(dual_code(d).same_span(c));
  c.for_each_codeword([&](const LinPoly& f) {
    for (const auto& g : d.generators()) CHECK(t->trace_q_to_p(bilinear_b(f, g)) == 0);
  });
}

TEST_CASE("code construction validates generators") {
  auto t = tower(2, 1, 3);
  CHECK_THROWS_AS(HermCode(t, {LinPoly::monomial(t, t->one(), 1)}), std::invalid_argument);
  const auto f = from_free_coeffs(t, {{0, t->one()}});
  CHECK_THROWS_AS(HermCode(t, {f, f}), std::invalid_argument);
  CHECK(HermCode::span_of(t, {f, f, LinPoly(t)}).dimension() == 1);
  const HermCode c(t, {f});
  CHECK(c.contains(f));
  CHECK(c.contains(LinPoly(t)));
  CHECK_FALSE(c.contains(from_free_coeffs(t, {{2, t->one()}})));
  CHECK_THROWS_AS(full_space(tower(3, 1, 3)).enumeration_size(100), BudgetExceeded);
}

TEST_CASE("matrix model") {
  auto t = tower(2, 1, 3);
  const auto id = FieldMatrix::identity(*t, 3);
  CHECK(matrix_code_rank_distribution(*t, {id}) == std::vector<std::uint64_t>{0, 0, 0, 1});
  FieldMatrix bad(3, 3);
  bad(0, 1) = t->one();
  CHECK_THROWS_AS(matrix_code_rank_distribution(*t, {bad}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_to_poly(t, bad), std::invalid_argument);

  // rank-1 Hermitian matrices over F_4, 3x3: (q^6 - 1)/(q^2 - 1) * (q - 1) = 21 at q = 2
  std::vector<HermMatrix> all;
  full_space(t).for_each_codeword([&](const LinPoly& f) { all.push_back(gram_matrix(f)); });
  const auto hist = matrix_code_rank_distribution(*t, all);
  CHECK(hist == std::vector<std::uint64_t>{1, 21, 210, 280});
}
