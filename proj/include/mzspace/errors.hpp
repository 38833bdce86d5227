#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzspace {

/// Any problem with user-supplied input. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based position. `line` is 0 when the text was a single literal.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(decorate(what, line, column)), message_(what), line_(line), column_(column) {}

  /// Message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class NotSplitError : public InputError {
 public:
  explicit NotSplitError(const std::string& detail) : InputError("field not split for G: " + detail) {}
};

class BudgetExceeded : public InputError {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : InputError(what + " (required budget " + std::to_string(required) + ")"), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace mzspace
