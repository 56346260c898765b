#pragma once

#include <stdexcept>
#include <string>

namespace ttperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (subgroup out of range, level
// mismatch, non-prime modulus, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structural invariant failed: equivariance, d∘d = 0, chain-map condition.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The requested object exists but is too large to materialize densely.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ttperm
