#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Malformed input to an operation: dimension or field mismatch, index out of range.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rejected user data: a Cayley table that is not a monoid, a non-prime modulus, ...
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result the theory guarantees did not hold. Always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hopfkit
