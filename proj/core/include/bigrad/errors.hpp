#pragma once

#include <stdexcept>
#include <string>

namespace bigrad {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape of a tensor argument does not match what the operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Numeric input or result is invalid (NaN/Inf, empty range, bad label, ...).
class ValueError : public Error {
 public:
  using Error::Error;
};

// Bad configuration (non-positive alpha, dropout >= 1, empty sweep, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bisection bracket precondition violated: deriv(lo) < 0 < deriv(hi) required.
class BracketError : public Error {
 public:
  using Error::Error;
};

// Data file is malformed: bad magic, truncation, out-of-range index/label,
// unparsable token. Message names the offending file and, for text, the line.
class DataError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss; message names the epoch and step.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bigrad
