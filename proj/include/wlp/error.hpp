#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A violated precondition (shape mismatch, out-of-range index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a graded module would fail the xy = yx check.
class InvalidModule : public Error {
 public:
  using Error::Error;
};

class NotArtinian : public Error {
 public:
  NotArtinian() : Error("ideal is not Artinian: S/I is infinite dimensional") {}
};

/// A decision method was asked to run on a degree pair it is not defined for.
class MethodNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Syntax error. `offset` is a 0-based character offset into the parsed text;
/// `line`/`column` are 1-based and filled in by line-aware parsers.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, offset, line, column)), message_(what), offset_(offset), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t offset, std::size_t line, std::size_t column) {
    if (line > 0) return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    return "at offset " + std::to_string(offset) + ": " + what;
  }

  std::string message_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wlp
