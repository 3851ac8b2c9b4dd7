#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcert {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfBounds : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

// Raised when matrix input is not symmetric; carries the first offending
// entry pair, 1-based.
class NotSymmetric : public Error {
 public:
  NotSymmetric(std::size_t row, std::size_t col)
      : Error("matrix is not symmetric at (" + std::to_string(row) + "," +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position + 1) +
              ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NonQuadraticTerm : public Error {
 public:
  using Error::Error;
};

class MalformedChain : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: a certificate or witness failed its own
// exact re-check. Must never occur; mapped to exit code 3 by the CLI.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace quadcert
