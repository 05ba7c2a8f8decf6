#pragma once

#include "ecsum/curve.hpp"

namespace ecsum {

// The four 3x3 determinants attached to a triple of affine points
// P_i = (x_i, y_i):
//
//   V  = det |1 x_i x_i^2|          = (x1-x2)(x2-x3)(x3-x1)
//   c0 = det |x_i x_i^2 y_i|
//   c1 = -det |1 x_i^2 y_i|         = (x2^2-x3^2)y1 + (x3^2-x1^2)y2 + (x1^2-x2^2)y3
//   c2 = det |1 x_i y_i|            = (x3-x2)y1 + (x1-x3)y2 + (x2-x1)y3
//
// All four flip sign when two points are swapped.
struct TripleCoefficients {
    FieldValue V;
    FieldValue c0;
    FieldValue c1;
    FieldValue c2;
};

// Computed from the explicit expanded forms above, not generic elimination.
// Requires three affine points over one field.
TripleCoefficients triple_coeffs(const Point& p1, const Point& p2, const Point& p3);

// Closed form for (P1+P2)+P3 when every step is a chord step:
//
//   x4 = -x1-x2-x3 + (V^2 - 2 c1 c2) / c2^2
//   y4 = -(c2 x4^2 + c1 x4 + c0) / V
//
// Invariant under all six permutations of the inputs, and equal to the
// iterated addition. Hypotheses (checked, NonGenericError otherwise): all
// points affine and on the curve, pairwise distinct x-coordinates, and
// P1+P2 != +-P3.
Point sum3_symmetric(const Point& p1, const Point& p2, const Point& p3, const Curve& curve);

// alpha: chord slope of (P1, P2); alpha_tilde: chord slope of (P1+P2, P3).
struct SlopePair {
    FieldValue alpha;
    FieldValue alpha_tilde;
};

// The two chord slopes, with the identity c2 * (alpha + alpha_tilde) = V
// asserted. Needs x1 != x2 and P1+P2 != +-P3; P3 may coincide with +-P1
// (when P3 = -P1 the slopes cancel: alpha + alpha_tilde = 0).
SlopePair slope_sum(const Point& p1, const Point& p2, const Point& p3, const Curve& curve);

// y = u2 x^2 + u1 x + u0.
struct ParabolaCoeffs {
    FieldValue u0;
    FieldValue u1;
    FieldValue u2;
};

// The unique parabola through three affine points with pairwise distinct
// x-coordinates: u_i = c_i / V by Cramer's rule on the Vandermonde system.
// With P4 = sum3_symmetric(...), the mirrored point (x4, -y4) lies on it.
ParabolaCoeffs parabola_coeffs(const Point& p1, const Point& p2, const Point& p3);

}  // namespace ecsum
