#pragma once

#include <stdexcept>
#include <string>

namespace bbgp {

/// Base for every failure raised while loading a theory. Line and column are
/// 1-based; zero means the position is unknown.
class TheoryError : public std::runtime_error {
 public:
  TheoryError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// Syntax fault.
class ParseError : public TheoryError {
  using TheoryError::TheoryError;
};

/// A rule declares a kind the user may not declare, or its head does not fit its kind.
class KindError : public TheoryError {
  using TheoryError::TheoryError;
};

/// A head variable does not occur in the body, or a fact is not ground.
class RangeError : public TheoryError {
  using TheoryError::TheoryError;
};

/// A pipeline stage was run out of order.
class StageOrderError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// select_extension() was handed no extensions.
class EmptySelection : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An explanation was requested for a goal with no matching memory records.
class UnknownGoal : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check on pipeline output failed.
class InvariantError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bbgp
