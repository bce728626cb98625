#pragma once

#include <stdexcept>
#include <string>

namespace billiard {

/// Violated precondition on user-supplied input. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidSpec : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotCoprime : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidRadius : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidOptions : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotRepresentable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace billiard
