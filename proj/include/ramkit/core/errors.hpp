#pragma once

#include <stdexcept>
#include <string>

namespace ramkit {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search or enumeration would exceed its configured budget.
// The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A decoder was handed something that is not a solution of the image
// instance, or a checked property failed. The CLI maps this to exit code 1.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramkit
