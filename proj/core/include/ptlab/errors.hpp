#pragma once

#include <stdexcept>
#include <string>

namespace ptlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad range, malformed input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact or exhaustive routine was asked to run above its size guard.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or configuration file contents.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ptlab
