#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencospark {

/// Raised on malformed Matrix Market input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a brute-force oracle is asked for an instance too large to
/// enumerate exhaustively.
class SizeGuardError : public std::invalid_argument {
 public:
  explicit SizeGuardError(const std::string& message)
      : std::invalid_argument(message) {}
};

}  // namespace gencospark
