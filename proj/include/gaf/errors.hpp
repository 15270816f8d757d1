#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured exhaustive-search bound would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Defense iteration revisited an earlier non-adjacent state.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A result failed its own post-condition check. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gaf
