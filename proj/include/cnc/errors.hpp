#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset, map or space does not live over the expected ground set.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation would exceed its enumeration budget. Size guards are hard
/// errors, never silent truncations.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant (empty image, overlapping pair,
/// topology not closed under union/intersection, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (non-integral space where an
/// integral one is required, representation not clear/distinct, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input rejected with a position.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cnc
