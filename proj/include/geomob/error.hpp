#pragma once

#include <stdexcept>
#include <string>

namespace geomob {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with input data: malformed files, invalid coordinates,
/// unknown area names, empty inputs.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Problems in numerical procedures: domain violations, singular fits,
/// undefined statistics.
class NumericError : public Error {
 public:
  using Error::Error;
};

class InvalidCoordinateError : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class LoadError : public DataError {
 public:
  using DataError::DataError;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class EmptyInputError : public DataError {
 public:
  using DataError::DataError;
};

class InsufficientDataError : public DataError {
 public:
  using DataError::DataError;
};

class ConfigError : public DataError {
 public:
  using DataError::DataError;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class FitError : public NumericError {
 public:
  using NumericError::NumericError;
};

class UndefinedCorrelationError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace geomob
