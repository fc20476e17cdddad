#pragma once

#include <stdexcept>
#include <string>

namespace nrb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical routine cannot produce a trustworthy result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPsd : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside its admissible range (r < 1, alpha not in [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (matrix documents, coefficient lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nrb
