#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysnf {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guardrail was hit. The CLI maps these to exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic failure (non-exact division, division by zero).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public InputError {
 public:
  AmbientMismatch() : InputError("operands live in different polynomial rings") {}
  explicit AmbientMismatch(const std::string& message) : InputError(message) {}
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UndeclaredVariable : public ParseError {
 public:
  UndeclaredVariable(const std::string& name, std::size_t position)
      : ParseError("undeclared variable '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NotDivisible : public ArithmeticError {
 public:
  NotDivisible() : ArithmeticError("divisor does not divide dividend") {}
};

class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by zero") {}
};

/// A polynomial required to be irreducible factors nontrivially.
class Reducible : public InputError {
 public:
  using InputError::InputError;
};

class DeltaZero : public InputError {
 public:
  DeltaZero() : InputError("a - 2b + 4c must be nonzero") {}
};

class InvalidAutomorphism : public InputError {
 public:
  using InputError::InputError;
};

class SizeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class PairLimitExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

}  // namespace polysnf
