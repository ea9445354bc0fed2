#pragma once

#include <stdexcept>
#include <string>

namespace ctlen {

/// Malformed or out-of-range arguments. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold for otherwise
/// well-formed input (e.g. asking for the Perron root of a reducible matrix).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ctlen
