#pragma once

#include <stdexcept>
#include <string>

namespace optframe {

// Base class for everything thrown by the framework.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A contract method was driven outside its preconditions: dimension mismatch,
// batch range out of bounds, non-finite parameters, and the like.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An optimizer (or adapter) asked for a capability the objective function does
// not provide. The message is the full diagnostic, naming the missing method.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A hyperparameter or experiment setting is outside its documented range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// User-supplied data (CSV rows, labels, problem coefficients) is invalid.
class InputError : public Error {
 public:
  using Error::Error;
};

// A numeric operation could not proceed (e.g. a finite-difference probe
// produced a non-finite objective).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace optframe
