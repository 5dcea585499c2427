#pragma once

#include <stdexcept>
#include <string>

namespace cyclocode {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: out-of-range values, regime violations, malformed grids.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Parameters for which the code is {0} (a = b = q-1, t = 0).
class ZeroCodeError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Materialization, enumeration or table caps exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal invariant broke (non-integral count, negative class size, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclocode
