#pragma once

#include <stdexcept>
#include <string>

namespace dmapf {

// Input text could not be parsed; line/column are 1-based (0 = unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0, int column = 0)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + message;
  }

  int line_;
  int column_;
};

// Opposite corners of the grid are blocked or mutually unreachable, so no
// corner-to-corner makespan exists; the caller must supply one explicitly.
class NoAutoMakespanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The planned agents cannot reach their goals within the horizon even with
// every other agent removed from the world.
class IntrinsicallyInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed its configured state budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cooperative deadline expired inside a solver call.
class TimeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dmapf
