#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsr {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands belong to different calculi.
class CalculusMismatch : public Error {
public:
  CalculusMismatch() : Error("relation sets belong to different calculi") {}
};

class UnknownCalculus : public Error {
public:
  explicit UnknownCalculus(const std::string &name)
      : Error("unknown builtin calculus '" + name + "'") {}
};

// Syntax or semantic problem in one of the text formats. Line and column are
// 1-based; zero means "not tied to a position".
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line = 0, std::size_t column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string &msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace qsr
