#pragma once

#include <stdexcept>
#include <string>

namespace socle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad ring, unit ideal, d >= m, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands live in different polynomial rings.
class RingMismatchError : public PreconditionError {
 public:
  RingMismatchError(const std::string& lhs, const std::string& rhs)
      : PreconditionError("ring mismatch: '" + lhs + "' vs '" + rhs + "'") {}
};

// The computation itself failed: non-stabilizing Hilbert-Samuel data,
// a colon quotient that is not an exact multiple, resource caps.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  /// Same position, message prefixed by the source name: "file:L:C: ...".
  ParseError(const std::string& source, const ParseError& inner)
      : Error(source + ":" + inner.what()), line_(inner.line_), column_(inner.column_) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace socle
