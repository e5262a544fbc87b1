#pragma once

#include <stdexcept>
#include <string>

namespace kc {

// Thrown when an exact computation would exceed its configured search or
// memory budget. Callers that can degrade gracefully catch this and report
// "inconclusive" instead of a verdict.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kc
