#pragma once

#include <stdexcept>
#include <string>

namespace latfan {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic would have wrapped. Results are never wrapped
// silently; an enumeration that overflows must abort, not misclassify.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Shape mismatch: ragged rows, non-square input to a square-only operation,
// vectors of the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Linear system has no unique solution.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Operation invoked outside its stated domain (precondition violation).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Strict polytope construction rejected the input point list.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input does not affinely span the ambient dimension.
class DimensionalityError : public Error {
 public:
  using Error::Error;
};

// A fact that must hold on valid input failed. Either the input violated an
// undetected hypothesis or there is a bug; callers should treat this as fatal.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

// Request outside the supported capability envelope (e.g. strict enumeration
// at a dimension without a runtime guarantee).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Operation not implemented for this input shape (e.g. isomorphism testing
// on non-simplicial polytopes).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed polytope file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace latfan
