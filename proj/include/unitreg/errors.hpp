#pragma once

#include <stdexcept>
#include <string>

namespace unitreg {

// Common base so callers can catch every library error in one clause.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed problem text (bad key, bad number, missing field).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Yf is not contained in Y, or Wf is not contained in W.
class InvarianceViolated : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration was asked to exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A witness was requested for an element that is not unit-regular.
class NotUnitRegular : public Error {
 public:
  using Error::Error;
};

// A linear system has no solution (vector outside the relevant range).
class NoSolution : public Error {
 public:
  using Error::Error;
};

// extend_basis was called with inner not contained in outer.
class ContainmentViolated : public Error {
 public:
  using Error::Error;
};

// A checked precondition of an operation does not hold.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Operands have incompatible sizes, moduli, or ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace unitreg
