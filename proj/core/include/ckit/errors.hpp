#pragma once

#include <stdexcept>
#include <string>

namespace ckit {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact-arithmetic violations: division by zero, mixing incompatible
/// quadratic extensions, or asking for a part a value does not have.
struct ArithmeticError : Error {
  using Error::Error;
};

/// Invalid input to an operation (dimension mismatch, failed precondition).
struct DomainError : Error {
  using Error::Error;
};

/// A matrix exponential was requested at a time where no exact value exists.
struct NotExactlyEvaluable : Error {
  using Error::Error;
};

/// Text input could not be parsed. `pos` is a byte offset into the input.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at) : Error(msg), pos(at) {}
};

}  // namespace ckit
