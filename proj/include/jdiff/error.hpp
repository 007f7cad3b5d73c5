#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jdiff {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON text or a duplicate object key. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Malformed arrow-notation path expression.
class PathError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: bad regex, threshold out of range, unknown keys...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A similarity operator failed while evaluating a pair.
class OperatorError : public Error {
 public:
  OperatorError(std::string operator_name, const std::string& what)
      : Error("operator '" + operator_name + "' failed: " + what),
        operator_name_(std::move(operator_name)) {}

  const std::string& operator_name() const noexcept { return operator_name_; }

 private:
  std::string operator_name_;
};

// Recursion limit exceeded while diffing.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace jdiff
