#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotStarMatrix : public Error {
 public:
  using Error::Error;
};

class BlockDimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A problem matrix carries +inf, or some other structural input rule is broken.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Raised by trajectory synthesis when the canonical solution is not real.
class InfeasibleHorizon : public Error {
 public:
  enum class Reason { Unreached, Divergent };

  InfeasibleHorizon(Reason reason, std::size_t horizon, const std::string& what)
      : Error(what), reason_(reason), horizon_(horizon) {}

  Reason reason() const noexcept { return reason_; }
  std::size_t horizon() const noexcept { return horizon_; }

 private:
  Reason reason_;
  std::size_t horizon_;
};

/// Text input could not be parsed. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxplus
