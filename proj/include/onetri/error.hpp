#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onetri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side contract was violated (bad sizes, out-of-range arguments).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegenerateTriangle : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A squared-distance matrix has no Euclidean realization in the requested dimension.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

/// Numerical reconstruction did not reproduce the input within tolerance.
class ResidualTooLarge : public Error {
 public:
  ResidualTooLarge(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The analytic gradient is ambiguous at the requested point.
class NonDifferentiable : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { empty_input, malformed_literal, ragged_arity, duplicate_point, bad_header };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace onetri
