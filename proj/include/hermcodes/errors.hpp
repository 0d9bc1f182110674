#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermcodes {

/// Raised when an exhaustive enumeration would exceed the caller's budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " (needs " + std::to_string(required) + ", budget " +
                           std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Default cap on enumerated objects; every acceptance instance fits well inside it.
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

}  // namespace hermcodes
