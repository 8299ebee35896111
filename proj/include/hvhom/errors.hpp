#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hvhom {

// Base of every error raised by the library; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class SortError : public Error {
 public:
  explicit SortError(const std::string& what) : Error("sort error: " + what) {}
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error("invalid parameter: " + what) {}
};

class CalibrationFailed : public Error {
 public:
  explicit CalibrationFailed(const std::string& reason)
      : Error("calibration failed: " + reason) {}
};

class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::string name, std::string expected, std::string actual)
      : Error("constraint violation: " + name + " (expected " + expected + ", got " + actual + ")"),
        name_(std::move(name)),
        expected_(std::move(expected)),
        actual_(std::move(actual)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  std::string name_, expected_, actual_;
};

class InducedAlgebraUnavailable : public Error {
 public:
  explicit InducedAlgebraUnavailable(const std::string& why)
      : Error("induced algebra unavailable: " + why) {}
};

class WindowTooSmall : public Error {
 public:
  explicit WindowTooSmall(const std::string& why) : Error("window too small: " + why) {}
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

}  // namespace hvhom
