#pragma once

#include <stdexcept>
#include <string>

namespace artemis {

/// Raised when a structural guarantee that holds for every graph with no odd
/// hole, no antihole of length >= 5 and no prism fails on the input. The
/// message names the violated guarantee.
class NotArtemisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact oracle refused an input beyond its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace artemis
