#pragma once

#include <stdexcept>
#include <string>

namespace mobb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownProblemError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised when an objective or gradient evaluates to NaN/Inf.
class NonFiniteEvaluationError : public Error {
 public:
  using Error::Error;
};

class DualSolverError : public Error {
 public:
  using Error::Error;
};

/// No trial step satisfied the sufficient-decrease condition.
class LineSearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace mobb
