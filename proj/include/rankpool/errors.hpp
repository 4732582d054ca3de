#pragma once

#include <stdexcept>
#include <string>

namespace rankpool {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or lengths do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input or a numerical breakdown (e.g. failed factorization).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Fewer than two classes, or a class with no rows.
class DegenerateLabelsError : public Error {
 public:
  using Error::Error;
};

/// The projection carries no between-class energy.
class DegenerateProjectionError : public Error {
 public:
  using Error::Error;
};

/// Density estimation on unusable input.
class EstimationError : public Error {
 public:
  using Error::Error;
};

/// Malformed or truncated dataset / artifact file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankpool
