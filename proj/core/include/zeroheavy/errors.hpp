#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeroheavy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of an operation
/// (e.g. ln of a non-positive enclosure, a rational outside [0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition was violated (e.g. T' exponent too small).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Malformed function specification, rational literal or digit file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Sign changes of a derivative could not be separated at the requested
/// precision. Signals a violated finite-critical-set assumption.
class NonIsolationError : public Error {
 public:
  using Error::Error;
};

/// No pair of points with certified distinct function values was found.
class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

/// A refinement loop or digit budget ran out.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal certificate or invariant failed to re-validate.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace zeroheavy
