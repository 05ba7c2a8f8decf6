#pragma once

#include <stdexcept>
#include <string>

namespace ecsum {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operands belong to different fields (Q vs F_p, or different moduli).
class FieldMismatchError : public Error {
  public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

// Modulus rejected at construction: composite, or <= 3.
class BadPrimeError : public Error {
  public:
    using Error::Error;
};

// 4a^3 + 27b^2 = 0.
class SingularCurveError : public Error {
  public:
    using Error::Error;
};

class PointNotOnCurveError : public Error {
  public:
    using Error::Error;
};

// A closed-form hypothesis is violated; the message names which one.
class NonGenericError : public Error {
  public:
    using Error::Error;
};

// Polynomials over differently-sized variable sets.
class ArityMismatchError : public Error {
  public:
    using Error::Error;
};

// A rational expression's denominator is (or reduces to) the zero polynomial.
class ZeroDenominatorError : public Error {
  public:
    using Error::Error;
};

// Malformed textual input (curve descriptors, point lists, field values).
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace ecsum
