#pragma once

// Named checks over a code, each producing a verdict and a witness.

#include <string>
#include <vector>

#include "hermcodes/codefile.hpp"
#include "hermcodes/hermitian.hpp"

namespace hermcodes {

struct Report {
  std::string check;
  /// "pass", "fail" or "inconclusive".
  std::string verdict;
  Json witness = Json::object();
  double wall_ms = 0;
  /// Set when the verdict is inconclusive because the budget ran out.
  bool budget_exceeded = false;
};

/// bound, distance, theorem3, designs, kernel, idealisers, dual.
const std::vector<std::string>& known_checks();

/// Throws std::invalid_argument for an unknown check name.
Report run_check(const HermCode& c, const std::string& check, std::uint64_t budget);

Json report_to_json(const Report& r, bool timing);

}  // namespace hermcodes
