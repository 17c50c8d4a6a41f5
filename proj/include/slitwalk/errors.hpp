#pragma once

#include <stdexcept>
#include <string>

namespace slitwalk {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DiscriminantMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// Requested a coefficient beyond the truncation order.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class EmptyStepSet : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class HeightViolation : public Error {
 public:
  using Error::Error;
};

class NotReverseSymmetric : public Error {
 public:
  using Error::Error;
};

// A property that holds mathematically failed at runtime: a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ResourceGuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace slitwalk
