#pragma once

#include <stdexcept>
#include <string>

namespace offgrid {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation: bad argument, empty input, out-of-range value.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: matrix not Hermitian/PSD, singular or ill-conditioned
/// system, non-finite intermediate.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Bad run configuration or incompatible artifact files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File system or serialization failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A persisted file does not match the expected schema. Carries the name of
/// the offending column or field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string field)
      : Error(what + " (field: " + field + ")"), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Training produced a non-finite loss or parameter.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int epoch, int batch)
      : Error(what + " (epoch " + std::to_string(epoch) + ", batch " +
              std::to_string(batch) + ")"),
        epoch_(epoch),
        batch_(batch) {}

  int epoch() const { return epoch_; }
  int batch() const { return batch_; }

 private:
  int epoch_;
  int batch_;
};

}  // namespace offgrid
