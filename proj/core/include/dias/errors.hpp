#pragma once

#include <stdexcept>
#include <string>

namespace dias {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two scalars (or a scalar and a matrix) live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Bad field description, e.g. a composite modulus.
class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Division by zero or an unparsable scalar literal.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of matrices, vectors or subspaces do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// complement(a, b) called with a not contained in b.
class NotContained : public Error {
 public:
  using Error::Error;
};

class NotIdeal : public Error {
 public:
  using Error::Error;
};

class NotCentralIdeal : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  using Error::Error;
};

/// A constructed cover failed one of its defining-pair checks. Reaching this
/// on a valid algebra means there is a bug in the construction.
class CoverCertificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace dias
