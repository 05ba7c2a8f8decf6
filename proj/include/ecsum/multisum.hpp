#pragma once

#include <span>
#include <vector>

#include "ecsum/curve.hpp"
#include "ecsum/linalg.hpp"

namespace ecsum {

// Machinery for the closed-form n-point sum P_{n+1} = P1 + ... + Pn.
//
// The (n+1) x (n+1) matrix M concatenates a power block X and a mixed block
// Y: X[i][j] = x_i^(j-1) for j = 1 .. 1+ceil(n/2), Y[i][j] = x_i^(j-1) y_i
// for j = 1 .. floor(n/2), with the y-entries of the LAST row (the candidate
// sum) negated. When the last row holds the true sum, det M = 0.
//
// The signed cofactors c_l = (-1)^l det(M_{l+1}), where M_{l+1} drops column
// l+1 and the last row, depend only on P1..Pn and yield the closed forms
// implemented below; d_l is the alias c_{l + ceil(n/2) + 1} with d_{-1} = 0.

// Builds M for points P1..Pn and candidate sum p_next (all affine, n >= 2).
Matrix sum_matrix(std::span<const Point> points, const Point& p_next);

class SumCofactors {
  public:
    SumCofactors(int n, std::vector<FieldValue> c);

    int n() const { return n_; }
    // c_l, 0 <= l <= n.
    const FieldValue& c(int l) const;
    // d_l = c_{l + ceil(n/2) + 1}; d(-1) is zero.
    const FieldValue& d(int l) const;

  private:
    int n_;
    std::vector<FieldValue> c_;
    FieldValue zero_;
};

// All n+1 signed cofactors of the deleted-last-row minors. n >= 2.
SumCofactors cofactors(std::span<const Point> points);

// x_{n+1} = -sum(x_k) + (c_m^2 - 2 d_{m-1} d_{m-2}) / d_{m-1}^2   (n = 2m)
//           -sum(x_k) + (d_{m-2}^2 - 2 c_m c_{m-1}) / c_m^2       (n = 2m-1)
// NonGenericError when the denominator cofactor vanishes.
FieldValue multisum_x(std::span<const Point> points);

// y_{n+1} = (sum_{l<=ceil(n/2)} c_l x^l) / (sum_{l<floor(n/2)} d_l x^l)
// evaluated at x = x_next. NonGenericError on a zero denominator.
FieldValue multisum_y(std::span<const Point> points, const FieldValue& x_next);

// Left fold of the addition law; total (handles every case, O included).
Point iterated_sum(std::span<const Point> points, const Curve& curve);

// Closed-form sum. Generic configuration required: every fold step of the
// oracle is a chord step and no cofactor denominator vanishes; anything else
// raises NonGenericError (iterated_sum is the robust entry point).
Point multisum(std::span<const Point> points, const Curve& curve);

// det M = 0 check for a claimed sum; exact, no curve needed.
bool verify_vanishing(std::span<const Point> points, const Point& p_next);

}  // namespace ecsum
