#include "doctest.h"
#include "support.hpp"

#include "hermcodes/codefile.hpp"
#include "hermcodes/constructions.hpp"
#include "hermcodes/verify.hpp"

using namespace hermcodes;
using namespace testsupport;

namespace {

HermCode make(Family f, std::uint64_t q, std::uint32_t d = 2) {
  ConstructionParams p;
  p.family = f;
  p.q = q;
  p.n = 3;
  p.d = d;
  return build(tower_for(p), p);
}

}  // namespace

TEST_CASE("tower json") {
  auto t = tower(3, 1, 3);
  const Json j = tower_to_json(*t);
  CHECK(j.at("p") == 3);
  CHECK(j.at("modulus").size() == 7);
  CHECK(tower_from_json(j)->same_as(*t));
  Json bad = j;
  bad["modulus"] = {1, 0, 1};
  CHECK_THROWS_AS(tower_from_json(bad), std::invalid_argument);
}

TEST_CASE("code round trip in both models") {
  for (const auto& c : {make(Family::H, 3), make(Family::M, 2), make(Family::M, 3), make(Family::E, 2, 3)}) {
    const Json j = code_to_json(c);
    const auto back = code_from_json(j);
    CHECK(back.same_span(c));
    CHECK(back.model() == c.model());
    CHECK(back.label() == c.label());
    CHECK(back.declared_d() == c.declared_d());
    CHECK(code_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("malformed code files") {
  Json j = code_to_json(make(Family::H, 2));
  Json a = j;
  a["model"] = "tensor";
  CHECK_THROWS_AS(code_from_json(a), std::invalid_argument);
  Json b = j;
  b["generators"][0].erase(0);
  CHECK_THROWS_AS(code_from_json(b), std::invalid_argument);
  Json c = j;
  c["generators"][0][0][0] = 7;
  CHECK_THROWS_AS(code_from_json(c), std::invalid_argument);
  Json d = j;
  d.erase("tower");
  CHECK_THROWS_AS(code_from_json(d), std::invalid_argument);
  Json e = j;  // a non-Hermitian generator
  e["generators"][0][1] = Json::array({1, 0, 0, 0, 0, 0});
  e["generators"][0][0] = Json::array({0, 0, 0, 0, 0, 0});
  e["generators"][0][2] = Json::array({0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(code_from_json(e), std::invalid_argument);
}

TEST_CASE("verify reports") {
  const auto h = make(Family::H, 2);
  for (const auto& name : known_checks()) CHECK(run_check(h, name, kDefaultBudget).verdict == "pass");
  CHECK_THROWS_AS(run_check(h, "nonsense", kDefaultBudget), std::invalid_argument);

  const auto r = run_check(make(Family::H, 3), "dual", 50);
  CHECK(r.verdict == "inconclusive");
  CHECK(r.budget_exceeded);

  const Json plain = report_to_json(run_check(h, "bound", kDefaultBudget), false);
  CHECK_FALSE(plain.contains("wall_time_ms"));
  CHECK(report_to_json(run_check(h, "bound", kDefaultBudget), true).contains("wall_time_ms"));

  // M is outside the closed form's hypothesis: vacuous pass, vectors recorded
  const auto t3 = run_check(make(Family::M, 2), "theorem3", kDefaultBudget);
  CHECK(t3.verdict == "pass");
  CHECK(t3.witness.at("hypothesis") == false);
}

TEST_CASE("verify catches a bad declared distance") {
  const auto h = make(Family::H, 2).with_declared_d(3);
  const auto r = run_check(h, "distance", kDefaultBudget);
  CHECK(r.verdict == "fail");
  CHECK(r.witness.contains("codeword"));
  CHECK(run_check(h, "bound", kDefaultBudget).verdict == "fail");
}
