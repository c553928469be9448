#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error; when a 1-based line/column position is known it is appended
// to the message.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line = 0;
  std::size_t column = 0;
};

struct DimensionError : Error {
  using Error::Error;
};

// Collects every schema violation found in a document, not just the first.
struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), issues(std::move(problems)) {}
  std::vector<std::string> issues;

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out = "invalid document:";
    for (const auto& p : problems) out += "\n  - " + p;
    return out;
  }
};

}  // namespace nls
