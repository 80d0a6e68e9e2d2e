#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skelkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an operation was violated by the caller.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds what an exhaustive (desk-scale) routine is built for.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed to hold. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ConflationError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

}  // namespace skelkit
