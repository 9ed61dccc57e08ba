#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

// Violated precondition or out-of-range argument.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Bad run configuration (mode mismatch, malformed file, unknown option).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric procedure failed to meet its declared tolerance or budget.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Workload exceeds the configured resource budget.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace szeta
