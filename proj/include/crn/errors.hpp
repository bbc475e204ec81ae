#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crn {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (CLI exit code 1).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation could not be completed (CLI exit code 2).
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// A pipeline refused to run because a precondition was not certified (CLI exit code 3).
class GateError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public ComputationError {
 public:
  DivisionByZero() : ComputationError("division by zero") {}
};

class SingularSystem : public ComputationError {
 public:
  SingularSystem() : ComputationError("linear system is singular over the parameter field") {}
};

class CapExceeded : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class Timeout : public ComputationError {
 public:
  Timeout() : ComputationError("time budget exhausted") {}
};

class InvalidOrderMatrix : public InputError {
 public:
  using InputError::InputError;
};

class NotEliminationOrder : public InputError {
 public:
  using InputError::InputError;
};

/// A declared intermediate violates the intermediate conditions.
class IntermediateError : public InputError {
 public:
  enum class Kind { unknown_species, not_a_complex, nonzero_coefficient_elsewhere, no_inflow, no_outflow };

  IntermediateError(Kind kind, const std::string& species, const std::string& message)
      : InputError(message), kind_(kind), species_(species) {}

  Kind kind() const { return kind_; }
  const std::string& species() const { return species_; }

 private:
  Kind kind_;
  std::string species_;
};

/// The intermediate subsystem has no unique solution over the parameter field.
class SingularIntermediateSystem : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Phi was requested before the algebraic independence of the phi functions was settled.
class IndependenceNotVerified : public GateError {
 public:
  IndependenceNotVerified()
      : GateError("algebraic independence of the phi functions is not verified (run the independence "
                  "check or pass --assume-independent)") {}
};

class KeepContainsIntermediate : public InputError {
 public:
  using InputError::InputError;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace crn
