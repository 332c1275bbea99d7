#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace logres {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands live in Chow rings of different dimension.
class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two polynomials share a nonconstant factor, so the singular set is not isolated.
class CommonFactorError : public Error {
 public:
  using Error::Error;
};

// The requested quantity is outside what the library certifies (e.g. Milnor numbers
// at degenerate singularities).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A numeric verdict could not be certified.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)), message_(message), position_(position) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Root iteration did not converge; carries the largest correction of every sweep.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

}  // namespace logres
