#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubiclab {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or use different term orders).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text could not be parsed. `position()` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured computational budget (minor count, iterations) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A randomized construction did not succeed within its attempt budget.
class RetriesExhausted : public Error {
 public:
  RetriesExhausted(const std::string& what, int attempts)
      : Error(what + " (gave up after " + std::to_string(attempts) + " attempts)"),
        attempts_(attempts) {}

  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

}  // namespace cubiclab
