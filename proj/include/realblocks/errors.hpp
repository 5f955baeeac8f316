#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realblocks {

/// Malformed or inconsistent caller input (degrees, non-members, bad indices).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the desk-scale resource caps.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always indicates a bug or a
/// violated mathematical invariant, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact arithmetic failure: division by zero, int64 overflow.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reduction modulo p of a value that is not p-integral.
class IntegralityError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace realblocks
