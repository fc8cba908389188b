#pragma once

#include <stdexcept>
#include <string>

namespace spfg {

// Raised when an input file (or in-memory text) is malformed.
// Carries 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Raised when an operation's structural precondition does not hold
// (e.g. a solver that requires a 2K2-free forcing graph is handed one
// that is not, or a kernelization mode is used on the wrong class).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace spfg
