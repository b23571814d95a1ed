#pragma once

#include <stdexcept>
#include <string>

namespace symtoep {

/// Base class for all library errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, rationals, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Tuple length does not match the ambient dimension d.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Index or argument outside the set an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A window is too small for the symbol it is asked to resolve.
class MarginError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical or structural precondition violated (non-commuting input, ...).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Joint diagonalisation could not separate the spectrum.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Symbol recovery: the probe system has no solution within the bound.
class NotToeplitzError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Symbol recovery: the probe system does not pin down every coefficient.
class UnderdeterminedError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace symtoep
