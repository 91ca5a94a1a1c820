#pragma once

#include <stdexcept>
#include <string>

namespace irrmult {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two values from different ambient rings were combined.
class ArityMismatchError : public Error {
public:
  using Error::Error;
};

/// Exact integer arithmetic would wrap. Never ignored, never saturated.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A precondition on the mathematical input is violated (unit-ideal
/// component, colon by the zero ideal, ideal of infinite colength, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class NotMPrimaryError : public DomainError {
public:
  using DomainError::DomainError;
};

class NotParameterIdealError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Sampled values have not settled into a polynomial within the sampling
/// budget. Retryable: raise n_max.
class NotStabilizedError : public Error {
public:
  using Error::Error;
};

/// The tail differences stabilize to a nonzero constant one level above the
/// requested degree: the data has higher degree than the caller promised.
class DegreeExceededError : public Error {
public:
  using Error::Error;
};

/// A bounded search ran out of budget. Says nothing about nonexistence.
class NotFoundWithinBoundError : public Error {
public:
  using Error::Error;
};

/// An enumeration box or similar resource limit was exceeded.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Syntax or semantic error in an instance file, with source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace irrmult
