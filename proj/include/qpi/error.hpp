#pragma once

#include <stdexcept>
#include <string>

namespace qpi {

/* Raised when an exact computation would exceed the configured enumeration
 * budget (answer would be correct but is not attempted). */
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpi
