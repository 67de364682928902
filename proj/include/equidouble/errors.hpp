#pragma once

#include <stdexcept>
#include <string>

namespace equidouble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch in a linear-algebra operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input data violates the invariants of the object being built.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Singular system, division by zero, non-invertible element.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Caller combined objects that do not belong together.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace equidouble
