#pragma once

#include <stdexcept>
#include <string>

namespace charbound {

// Base of every error raised by the library. Callers that only care about
// "the input was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands do not share a truncation cap, or a value violates its type
// invariants.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Inversion requested for a class whose constant term is not 1.
class NotAUnitError : public Error {
 public:
  using Error::Error;
};

// Cohomological degree of an expression does not match what the pairing
// or intersection requires.
class DegreeError : public Error {
 public:
  using Error::Error;
};

// Operation is undefined in the variety's dimension (e.g. hyperplane
// section of a curve).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A quantity that is provably constrained came out wrong; indicates a bug
// or an invalid model rather than bad user input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace charbound
