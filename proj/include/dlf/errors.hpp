#pragma once

#include <stdexcept>
#include <string>

namespace dlf {

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An operation's precondition does not hold for the given field.
class OperationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The line field is not the image of any discrete vector field.
class NotInImage : public OperationError {
public:
  using OperationError::OperationError;
};

}  // namespace dlf
