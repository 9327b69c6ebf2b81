#pragma once

#include <stdexcept>
#include <string>

namespace cvxgap {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A point (or interval endpoint) violates a domain requirement.
class DomainError : public Error {
public:
  using Error::Error;
};

// Two operands were expected to live on the same interval.
class DomainMismatchError : public Error {
public:
  using Error::Error;
};

class LengthMismatchError : public Error {
public:
  using Error::Error;
};

// x1 < x2 < x3 (or similar strict ordering) violated.
class OrderError : public Error {
public:
  using Error::Error;
};

// An input constraint (weights, x+y=a+b, nonnegativity probe) failed.
class ConstraintError : public Error {
public:
  using Error::Error;
};

class ToleranceError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

class NonFiniteError : public Error {
public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class CrossCheckError : public Error {
public:
  using Error::Error;
};

class ParameterError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace cvxgap
