#pragma once

#include <stdexcept>
#include <string>

namespace kohn {

/// Errors caused by bad input. The CLI maps these to exit code 1.
class UserError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Violated internal invariants. The CLI maps these to exit code 2.
class InternalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UserError {
public:
  using UserError::UserError;
};

class ConstraintError : public UserError {
public:
  using UserError::UserError;
};

class NonFreeAction : public ConstraintError {
public:
  using ConstraintError::ConstraintError;
};

class UnsupportedFamily : public UserError {
public:
  using UserError::UserError;
};

class DomainError : public UserError {
public:
  using UserError::UserError;
};

class SizeLimit : public UserError {
public:
  using UserError::UserError;
};

class NonIntegralDimension : public InternalError {
public:
  using InternalError::InternalError;
};

class TruncationError : public InternalError {
public:
  using InternalError::InternalError;
};

class ClosureMismatch : public InternalError {
public:
  using InternalError::InternalError;
};

}  // namespace kohn
