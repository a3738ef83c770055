#pragma once

#include <stdexcept>
#include <string>

namespace widecover {

// A caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact search refused an instance above its size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural fact that must hold for every input did not hold. Seeing one
// of these means the implementation is wrong, not the input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalConsistencyError(message);
}

}  // namespace detail
}  // namespace widecover
