#pragma once

#include <stdexcept>
#include <string>

namespace bstick {

// Precondition violations: bad (k, n), x outside (0,1), malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact formula was asked for n above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulation would exceed the configured trials * n budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bstick
