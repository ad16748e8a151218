#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infothresh {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument or an operation that is undefined for otherwise
// well-typed inputs (degenerate denominator, undefined threshold,
// flat curvature, missing bracket, empty class, bad index).
struct DomainError : Error {
  using Error::Error;
};

// A solver target that cannot be met anywhere in its search domain.
struct NoSolutionError : Error {
  using Error::Error;
};

// Filesystem failure during import or export.
struct IoError : Error {
  using Error::Error;
};

// Configuration text that does not parse or validate.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  // 1-based position of the offending input, 0 when unknown
  // (e.g. a semantic error located by key path instead).
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace infothresh
