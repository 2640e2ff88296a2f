#pragma once

#include <stdexcept>
#include <string>

namespace ecd {

/// Raised on violated preconditions, malformed inputs, and arithmetic overflow.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with a 1-based line number.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

}  // namespace ecd
