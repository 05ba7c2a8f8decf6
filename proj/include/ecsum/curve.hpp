#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ecsum/field.hpp"

namespace ecsum {

// An affine point (x, y) or the point at infinity O.
class Point {
  public:
    static Point infinity() { return Point(); }
    static Point affine(FieldValue x, FieldValue y);

    bool is_infinity() const { return !xy_.has_value(); }
    bool is_affine() const { return xy_.has_value(); }

    const FieldValue& x() const;
    const FieldValue& y() const;

    Point negated() const;

    // "(x,y)" or "O".
    std::string to_string() const;

    friend bool operator==(const Point& a, const Point& b);
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  private:
    Point() = default;
    std::optional<std::pair<FieldValue, FieldValue>> xy_;
};

// Which branch of the addition law applies to a pair of points. Dispatch
// order: identity rules first, then distinct x-coordinates (chord), then
// opposite y (vertical line, includes the y = 0 self-pairing), else tangent.
enum class AdditionCase { LeftIdentity, RightIdentity, Chord, Vertical, Tangent };

const char* to_string(AdditionCase c);

// y^2 = x^3 + ax + b over Q or F_p (p > 3), nonsingular: 4a^3 + 27b^2 != 0.
class Curve {
  public:
    Curve(FieldValue a, FieldValue b);

    const Field& field() const { return a_.field(); }
    const FieldValue& a() const { return a_; }
    const FieldValue& b() const { return b_; }

    // True iff P = O or y^2 = x^3 + ax + b exactly.
    bool contains(const Point& p) const;

    AdditionCase addition_case(const Point& p, const Point& q) const;

    // Full addition law. Throws PointNotOnCurveError if an operand is not
    // on the curve; an internal division by zero cannot occur once dispatch
    // is correct.
    Point add(const Point& p, const Point& q) const;
    Point add(const Point& p, const Point& q, AdditionCase* case_out) const;

    // Double-and-add, left to right. k = 0 gives O, negative k negates.
    Point scalar_mul(const mpz_class& k, const Point& p) const;
    Point scalar_mul(long k, const Point& p) const { return scalar_mul(mpz_class(k), p); }

    friend bool operator==(const Curve& e1, const Curve& e2) {
        return e1.a_ == e2.a_ && e1.b_ == e2.b_;
    }

  private:
    Point add_unchecked(const Point& p, const Point& q, AdditionCase* case_out) const;

    FieldValue a_;
    FieldValue b_;
};

}  // namespace ecsum
