#pragma once

#include <stdexcept>
#include <string>

namespace lambconv {

// Input outside the mathematical domain of an operation (negative time,
// non-positive width, unsupported quantum numbers, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or invalid scenario/sweep description.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lambconv
