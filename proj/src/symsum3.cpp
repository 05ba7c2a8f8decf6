#include "ecsum/symsum3.hpp"

namespace ecsum {

namespace {

void require_affine_triple(const Point& p1, const Point& p2, const Point& p3) {
    if (p1.is_infinity() || p2.is_infinity() || p3.is_infinity()) {
        throw NonGenericError("all three points must be affine (no point at infinity)");
    }
    if (p1.x().field() != p2.x().field() || p2.x().field() != p3.x().field()) {
        throw FieldMismatchError("triple of points over different fields");
    }
}

void require_on_curve(const Point& p, const Curve& curve, const char* which) {
    if (!curve.contains(p)) {
        throw PointNotOnCurveError(std::string(which) + " not on curve: " + p.to_string());
    }
}

}  // namespace

TripleCoefficients triple_coeffs(const Point& p1, const Point& p2, const Point& p3) {
    require_affine_triple(p1, p2, p3);
    const FieldValue& x1 = p1.x();
    const FieldValue& y1 = p1.y();
    const FieldValue& x2 = p2.x();
    const FieldValue& y2 = p2.y();
    const FieldValue& x3 = p3.x();
    const FieldValue& y3 = p3.y();

    const FieldValue V = (x1 - x2) * (x2 - x3) * (x3 - x1);
    const FieldValue c2 = (x3 - x2) * y1 + (x1 - x3) * y2 + (x2 - x1) * y3;
    const FieldValue c1 =
        (x2 * x2 - x3 * x3) * y1 + (x3 * x3 - x1 * x1) * y2 + (x1 * x1 - x2 * x2) * y3;
    const FieldValue c0 = x2 * x3 * (x3 - x2) * y1 + x1 * x3 * (x1 - x3) * y2 +
                          x1 * x2 * (x2 - x1) * y3;
    return {V, c0, c1, c2};
}

Point sum3_symmetric(const Point& p1, const Point& p2, const Point& p3, const Curve& curve) {
    require_affine_triple(p1, p2, p3);
    require_on_curve(p1, curve, "P1");
    require_on_curve(p2, curve, "P2");
    require_on_curve(p3, curve, "P3");
    if (p1.x() == p2.x() || p2.x() == p3.x() || p1.x() == p3.x()) {
        throw NonGenericError(
            "coincident or opposite points among P1, P2, P3 (equal x-coordinates, V = 0)");
    }
    const Point partial = curve.add(p1, p2);
    if (partial == p3 || partial == p3.negated()) {
        throw NonGenericError("intermediate sum degenerates: P1+P2 = +-P3");
    }

    const auto [V, c0, c1, c2] = triple_coeffs(p1, p2, p3);
    if (c2.is_zero()) {
        // Ruled out by the slope-sum identity once the hypotheses hold.
        throw Error("internal: c2 = 0 on a generic triple");
    }
    const FieldValue two = curve.field().from_int(2);
    const FieldValue x4 =
        -(p1.x() + p2.x() + p3.x()) + (V * V - two * c1 * c2) / (c2 * c2);
    const FieldValue y4 = -(c2 * x4 * x4 + c1 * x4 + c0) / V;
    return Point::affine(x4, y4);
}

SlopePair slope_sum(const Point& p1, const Point& p2, const Point& p3, const Curve& curve) {
    require_affine_triple(p1, p2, p3);
    require_on_curve(p1, curve, "P1");
    require_on_curve(p2, curve, "P2");
    require_on_curve(p3, curve, "P3");
    if (p1.x() == p2.x()) {
        throw NonGenericError("chord slope of (P1, P2) undefined: x1 = x2");
    }
    const Point partial = curve.add(p1, p2);
    if (partial == p3 || partial == p3.negated()) {
        throw NonGenericError("chord slope of (P1+P2, P3) undefined: P1+P2 = +-P3");
    }

    const FieldValue alpha = (p2.y() - p1.y()) / (p2.x() - p1.x());
    const FieldValue alpha_tilde = (p3.y() - partial.y()) / (p3.x() - partial.x());

    const auto [V, c0, c1, c2] = triple_coeffs(p1, p2, p3);
    (void)c0;
    (void)c1;
    if (c2 * (alpha + alpha_tilde) != V) {
        throw Error("internal: slope-sum identity c2*(alpha+alpha~) = V violated");
    }
    return {alpha, alpha_tilde};
}

ParabolaCoeffs parabola_coeffs(const Point& p1, const Point& p2, const Point& p3) {
    require_affine_triple(p1, p2, p3);
    const auto [V, c0, c1, c2] = triple_coeffs(p1, p2, p3);
    if (V.is_zero()) {
        throw NonGenericError("no unique parabola: repeated x-coordinates (V = 0)");
    }
    const ParabolaCoeffs u{c0 / V, c1 / V, c2 / V};
    for (const Point* p : {&p1, &p2, &p3}) {
        if (u.u2 * p->x() * p->x() + u.u1 * p->x() + u.u0 != p->y()) {
            throw Error("internal: interpolated parabola misses an input point");
        }
    }
    return u;
}

}  // namespace ecsum
