#pragma once

#include <random>

#include "hermcodes/gf.hpp"
#include "hermcodes/linpoly.hpp"

namespace testsupport {

using namespace hermcodes;

inline TowerPtr tower(std::uint32_t p, std::uint32_t e, std::uint32_t n) { return FieldTower::make(p, e, n); }

inline FFElement random_element(const FieldTower& t, std::mt19937_64& rng) {
  return t.from_value(std::uniform_int_distribution<std::uint64_t>(0, t.order() - 1)(rng));
}

inline LinPoly random_linpoly(const TowerPtr& t, std::mt19937_64& rng) {
  std::vector<FFElement> c(t->n());
  for (auto& x : c) x = random_element(*t, rng);
  return LinPoly(t, c);
}

}  // namespace testsupport
