#pragma once

#include <stdexcept>
#include <string>

namespace hcircle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input: bad files, reducible minimal polynomials,
// parametrizations that exhaust the parameter budget.
class InputError : public Error {
 public:
  using Error::Error;
};

// Division by zero, field mismatch, non-invertible leading coefficient.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hcircle
