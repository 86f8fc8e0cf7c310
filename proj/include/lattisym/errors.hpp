#pragma once

#include <stdexcept>
#include <string>

namespace lattisym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in field arithmetic") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mixing exact and numeric scalars in one computation.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateGenerators : public Error {
 public:
  using Error::Error;
};

/// A square root required by the director construction is not in Q(sqrt2, sqrt3).
class NormOutsideField : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class NonOrthonormalDirectors : public Error {
 public:
  using Error::Error;
};

class AsymmetricInput : public Error {
 public:
  using Error::Error;
};

class ZeroMatrix : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace lattisym
