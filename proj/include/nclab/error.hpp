#pragma once

#include <stdexcept>
#include <string>

namespace nclab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not fit together (size mismatch, wrong ground set).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (e.g. alpha is not << beta).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested beyond the available truncation order.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// The normalization phi(a) = 1 (equivalently t_0 = 1) is violated.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; reaching this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nclab
