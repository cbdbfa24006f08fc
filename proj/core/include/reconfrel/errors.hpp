#pragma once

#include <stdexcept>
#include <string>

namespace reconfrel {

/// Malformed model or DNF input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0, int column = 0)
      : std::runtime_error(std::move(message)), line(line), column(column) {}
  int line;
  int column;
};

/// The requested exact computation exceeds the configured size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The model admits no operational path at all.
class InoperableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reconfrel
