#pragma once

#include <stdexcept>
#include <string>

namespace nhho {

// Raised when an input lies outside the domain an operation is defined on
// (parameter square, positive frequency, degenerate spectrum, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when two operands have incompatible sizes.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nhho
