// Error types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace cubical {

// Any malformed input: illegal letter words, inconsistent presentations,
// unparseable files.  The CLI maps this to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure in a text input; carries the 1-based source line.
struct ParseError : Error {
  int line;
  std::string message;  // without the line prefix
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_), message(msg) {}
};

}  // namespace cubical
