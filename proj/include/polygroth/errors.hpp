#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polygroth {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed call: dimension mismatch, bad flag value, wrong input shape.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined on its argument (dimension of the empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A half-space with zero normal vector.
class DegenerateConstraintError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Construction of a value that would break a type invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds one of the configured size caps.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input uses a construct outside the supported fragment.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text formats; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polygroth
