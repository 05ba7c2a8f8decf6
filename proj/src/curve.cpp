#include "ecsum/curve.hpp"

namespace ecsum {

Point Point::affine(FieldValue x, FieldValue y) {
    if (x.field() != y.field()) {
        throw FieldMismatchError("point coordinates from different fields");
    }
    Point p;
    p.xy_.emplace(std::move(x), std::move(y));
    return p;
}

const FieldValue& Point::x() const {
    if (is_infinity()) throw Error("x() of the point at infinity");
    return xy_->first;
}

const FieldValue& Point::y() const {
    if (is_infinity()) throw Error("y() of the point at infinity");
    return xy_->second;
}

Point Point::negated() const {
    if (is_infinity()) return *this;
    return affine(xy_->first, -xy_->second);
}

std::string Point::to_string() const {
    if (is_infinity()) return "O";
    return "(" + x().to_string() + "," + y().to_string() + ")";
}

bool operator==(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
}

const char* to_string(AdditionCase c) {
    switch (c) {
        case AdditionCase::LeftIdentity: return "left_identity";
        case AdditionCase::RightIdentity: return "right_identity";
        case AdditionCase::Chord: return "chord";
        case AdditionCase::Vertical: return "vertical";
        case AdditionCase::Tangent: return "tangent";
    }
    return "?";
}

Curve::Curve(FieldValue a, FieldValue b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.field() != b_.field()) {
        throw FieldMismatchError("curve coefficients from different fields");
    }
    const Field& f = a_.field();
    const FieldValue disc =
        f.from_int(4) * a_ * a_ * a_ + f.from_int(27) * b_ * b_;
    if (disc.is_zero()) {
        throw SingularCurveError("singular curve: 4a^3 + 27b^2 = 0 with a=" + a_.to_string() +
                                 ", b=" + b_.to_string());
    }
}

bool Curve::contains(const Point& p) const {
    if (p.is_infinity()) return true;
    if (p.x().field() != field()) {
        throw FieldMismatchError("point field differs from curve field");
    }
    const FieldValue& x = p.x();
    const FieldValue& y = p.y();
    return y * y == x * x * x + a_ * x + b_;
}

AdditionCase Curve::addition_case(const Point& p, const Point& q) const {
    if (p.is_infinity()) return AdditionCase::LeftIdentity;
    if (q.is_infinity()) return AdditionCase::RightIdentity;
    if (p.x() != q.x()) return AdditionCase::Chord;
    // Equal x: either opposite points (including y = 0, where the tangent is
    // vertical) or a genuine doubling.
    if (p.y() == -q.y()) return AdditionCase::Vertical;
    return AdditionCase::Tangent;
}

Point Curve::add(const Point& p, const Point& q) const { return add(p, q, nullptr); }

Point Curve::add(const Point& p, const Point& q, AdditionCase* case_out) const {
    if (!contains(p)) {
        throw PointNotOnCurveError("left operand not on curve: " + p.to_string());
    }
    if (!contains(q)) {
        throw PointNotOnCurveError("right operand not on curve: " + q.to_string());
    }
    return add_unchecked(p, q, case_out);
}

Point Curve::add_unchecked(const Point& p, const Point& q, AdditionCase* case_out) const {
    const AdditionCase c = addition_case(p, q);
    if (case_out) *case_out = c;
    switch (c) {
        case AdditionCase::LeftIdentity: return q;
        case AdditionCase::RightIdentity: return p;
        case AdditionCase::Vertical: return Point::infinity();
        default: break;
    }
    const Field& f = field();
    const FieldValue& x1 = p.x();
    const FieldValue& y1 = p.y();
    const FieldValue& x2 = q.x();
    const FieldValue& y2 = q.y();
    const FieldValue alpha = c == AdditionCase::Chord
                                 ? (y2 - y1) / (x2 - x1)
                                 : (f.from_int(3) * x1 * x1 + a_) / (y1 + y1);
    const FieldValue x3 = alpha * alpha - x1 - x2;
    const FieldValue y3 = -y1 - alpha * (x3 - x1);
    return Point::affine(x3, y3);
}

Point Curve::scalar_mul(const mpz_class& k, const Point& p) const {
    if (!contains(p)) {
        throw PointNotOnCurveError("scalar multiple of a point not on curve: " + p.to_string());
    }
    if (k == 0 || p.is_infinity()) return Point::infinity();
    const Point base = k < 0 ? p.negated() : p;
    const mpz_class mag = abs(k);
    Point acc = Point::infinity();
    const size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = add_unchecked(acc, acc, nullptr);
        if (mpz_tstbit(mag.get_mpz_t(), i)) {
            acc = add_unchecked(acc, base, nullptr);
        }
    }
    return acc;
}

}  // namespace ecsum
