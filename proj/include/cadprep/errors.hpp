#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cadprep {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable contexts, or a variable is outside its context.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a nonzero polynomial was given the zero polynomial.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// A polynomial reduced under one monomial order was combined with a basis of another.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exact division was requested but the divisor does not divide.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Sign determination at an algebraic sample ran out of its refinement budget.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A projection polynomial vanished identically over a positive-dimensional cell.
class NotWellOriented : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// A correlation coefficient was requested for a sample with zero variance.
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

}  // namespace cadprep
