#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverhh {

// Malformed or inconsistent input (DSL syntax, unknown names, bad tables).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A computation ran into one of its configured soundness bounds: degree bound,
// support cap, rule budget or search cap. The answer is unknown, not wrong.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold between independently computed quantities failed.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quiverhh
