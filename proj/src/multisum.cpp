#include "ecsum/multisum.hpp"

namespace ecsum {

namespace {

void require_affine_list(std::span<const Point> points, size_t min_count) {
    if (points.size() < min_count) {
        throw NonGenericError("need at least " + std::to_string(min_count) + " points, got " +
                              std::to_string(points.size()));
    }
    const Field& f = points[0].is_affine() ? points[0].x().field() : Field::rationals();
    for (const Point& p : points) {
        if (p.is_infinity()) {
            throw NonGenericError("all summands must be affine (no point at infinity)");
        }
        if (p.x().field() != f) {
            throw FieldMismatchError("points over different fields");
        }
    }
}

int ceil_half(int n) { return (n + 1) / 2; }
int floor_half(int n) { return n / 2; }

// One row of M: (1, x, ..., x^ceil(n/2), y, xy, ..., x^(floor(n/2)-1) y),
// with y negated for the candidate-sum row.
std::vector<FieldValue> matrix_row(const Point& p, int n, bool negate_y) {
    const Field& f = p.x().field();
    std::vector<FieldValue> row;
    row.reserve(static_cast<size_t>(n) + 1);
    FieldValue xp = f.one();
    for (int j = 0; j <= ceil_half(n); ++j) {
        row.push_back(xp);
        xp = xp * p.x();
    }
    const FieldValue y = negate_y ? -p.y() : p.y();
    xp = f.one();
    for (int j = 0; j < floor_half(n); ++j) {
        row.push_back(xp * y);
        xp = xp * p.x();
    }
    return row;
}

FieldValue sum_of_x(std::span<const Point> points) {
    FieldValue s = points[0].x();
    for (size_t i = 1; i < points.size(); ++i) s = s + points[i].x();
    return s;
}

FieldValue closed_form_x(std::span<const Point> points, const SumCofactors& cof) {
    const int n = cof.n();
    const FieldValue two = points[0].x().field().from_int(2);
    if (n % 2 == 0) {
        const int m = n / 2;
        const FieldValue& den = cof.d(m - 1);
        if (den.is_zero()) {
            throw NonGenericError("closed form undefined: cofactor d_{m-1} = 0");
        }
        const FieldValue num = cof.c(m) * cof.c(m) - two * cof.d(m - 1) * cof.d(m - 2);
        return -sum_of_x(points) + num / (den * den);
    }
    const int m = (n + 1) / 2;
    const FieldValue& den = cof.c(m);
    if (den.is_zero()) {
        throw NonGenericError("closed form undefined: cofactor c_m = 0");
    }
    const FieldValue num = cof.d(m - 2) * cof.d(m - 2) - two * cof.c(m) * cof.c(m - 1);
    return -sum_of_x(points) + num / (den * den);
}

FieldValue closed_form_y(const SumCofactors& cof, const FieldValue& x_next) {
    const int n = cof.n();
    const Field& f = x_next.field();
    // Horner on both cofactor polynomials.
    FieldValue num = f.zero();
    for (int l = ceil_half(n); l >= 0; --l) num = num * x_next + cof.c(l);
    FieldValue den = f.zero();
    for (int l = floor_half(n) - 1; l >= 0; --l) den = den * x_next + cof.d(l);
    if (den.is_zero()) {
        throw NonGenericError("closed form undefined: y-denominator vanishes at x_{n+1}");
    }
    return num / den;
}

}  // namespace

Matrix sum_matrix(std::span<const Point> points, const Point& p_next) {
    require_affine_list(points, 2);
    if (p_next.is_infinity()) {
        throw NonGenericError("candidate sum must be affine");
    }
    if (p_next.x().field() != points[0].x().field()) {
        throw FieldMismatchError("candidate sum over a different field");
    }
    const int n = static_cast<int>(points.size());
    Matrix m;
    m.reserve(static_cast<size_t>(n) + 1);
    for (const Point& p : points) m.push_back(matrix_row(p, n, false));
    m.push_back(matrix_row(p_next, n, true));
    return m;
}

SumCofactors::SumCofactors(int n, std::vector<FieldValue> c)
    : n_(n), c_(std::move(c)), zero_(c_.at(0).field().zero()) {
    if (n_ < 2 || c_.size() != static_cast<size_t>(n_) + 1) {
        throw Error("internal: cofactor list has wrong length");
    }
}

const FieldValue& SumCofactors::c(int l) const {
    if (l < 0 || l > n_) {
        throw Error("internal: cofactor index out of range: c_" + std::to_string(l));
    }
    return c_[static_cast<size_t>(l)];
}

const FieldValue& SumCofactors::d(int l) const {
    if (l == -1) return zero_;
    return c(l + ceil_half(n_) + 1);
}

SumCofactors cofactors(std::span<const Point> points) {
    require_affine_list(points, 2);
    const int n = static_cast<int>(points.size());
    // Top block: rows for P1..Pn over all n+1 columns.
    Matrix top;
    top.reserve(points.size());
    for (const Point& p : points) top.push_back(matrix_row(p, n, false));

    std::vector<FieldValue> c;
    c.reserve(static_cast<size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        Matrix minor;
        minor.reserve(points.size());
        for (const auto& row : top) {
            std::vector<FieldValue> r;
            r.reserve(row.size() - 1);
            for (int j = 0; j <= n; ++j) {
                if (j != l) r.push_back(row[static_cast<size_t>(j)]);
            }
            minor.push_back(std::move(r));
        }
        FieldValue det = det_exact(minor);
        c.push_back(l % 2 == 0 ? det : -det);
    }
    return SumCofactors(n, std::move(c));
}

FieldValue multisum_x(std::span<const Point> points) {
    return closed_form_x(points, cofactors(points));
}

FieldValue multisum_y(std::span<const Point> points, const FieldValue& x_next) {
    return closed_form_y(cofactors(points), x_next);
}

Point iterated_sum(std::span<const Point> points, const Curve& curve) {
    Point acc = Point::infinity();
    for (const Point& p : points) {
        acc = curve.add(acc, p);
    }
    return acc;
}

Point multisum(std::span<const Point> points, const Curve& curve) {
    require_affine_list(points, 2);
    for (const Point& p : points) {
        if (!curve.contains(p)) {
            throw PointNotOnCurveError("summand not on curve: " + p.to_string());
        }
    }
    // Generic means: the left fold never leaves chord steps.
    Point acc = points[0];
    for (size_t i = 1; i < points.size(); ++i) {
        if (curve.addition_case(acc, points[i]) != AdditionCase::Chord) {
            throw NonGenericError("fold step " + std::to_string(i) +
                                  " is not a chord step (coincident or opposite points)");
        }
        acc = curve.add(acc, points[i]);
    }

    const SumCofactors cof = cofactors(points);
    const FieldValue x_next = closed_form_x(points, cof);
    const FieldValue y_next = closed_form_y(cof, x_next);
    return Point::affine(x_next, y_next);
}

bool verify_vanishing(std::span<const Point> points, const Point& p_next) {
    return det_exact(sum_matrix(points, p_next)).is_zero();
}

}  // namespace ecsum
