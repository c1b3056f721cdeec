#pragma once

#include <stdexcept>
#include <string>

namespace galelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A subset enumeration would exceed its configured cap.
class EnumerationCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input violates general position where an operation requires it.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Point set does not affinely span its ambient space.
class RankDeficient : public DomainError {
 public:
  using DomainError::DomainError;
};

class RejectionBudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A documented precondition failed in a way the caller could not have checked cheaply.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace galelab
