#include "ecsum/identity.hpp"

#include <chrono>

#include "ecsum/linalg.hpp"
#include "ecsum/multisum.hpp"
#include "ecsum/sampler.hpp"

namespace ecsum {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    void check() const {
        if (Clock::now() > at) {
            throw ExpansionTimeout("exact expansion exceeded its deadline");
        }
    }
};

}  // namespace

RationalExpression::RationalExpression(SparsePolynomial num, SparsePolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.arity() != den_.arity()) {
        throw ArityMismatchError("numerator and denominator over different variable sets");
    }
    if (den_.is_zero()) {
        throw ZeroDenominatorError("rational expression with zero denominator");
    }
}

RationalExpression::RationalExpression(SparsePolynomial num)
    : num_(std::move(num)), den_(SparsePolynomial::constant(num_.arity(), mpq_class(1))) {}

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) {
    if (a.den() == b.den()) {
        return RationalExpression(a.num() + b.num(), a.den());
    }
    return RationalExpression(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalExpression operator-(const RationalExpression& a, const RationalExpression& b) {
    if (a.den() == b.den()) {
        return RationalExpression(a.num() - b.num(), a.den());
    }
    return RationalExpression(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b) {
    return RationalExpression(a.num() * b.num(), a.den() * b.den());
}

RationalExpression operator/(const RationalExpression& a, const RationalExpression& b) {
    if (b.num().is_zero()) {
        throw ZeroDenominatorError("division by a zero rational expression");
    }
    return RationalExpression(a.num() * b.den(), a.den() * b.num());
}

RationalExpression RationalExpression::operator-() const {
    return RationalExpression(-num_, den_);
}

CurveSymbols::CurveSymbols(unsigned n_points) : n_(n_points) {
    if (n_ == 0 || 2 * n_ + 2 > Monomial::kMaxVars) {
        throw Error("unsupported point count for symbolic identities: " +
                    std::to_string(n_points));
    }
}

unsigned CurveSymbols::x_index(unsigned i) const {
    if (i < 1 || i > n_) throw Error("point index out of range");
    return n_ + (i - 1);
}

unsigned CurveSymbols::y_index(unsigned i) const {
    if (i < 1 || i > n_) throw Error("point index out of range");
    return i - 1;
}

SparsePolynomial CurveSymbols::x(unsigned i) const {
    return SparsePolynomial::variable(arity(), x_index(i));
}

SparsePolynomial CurveSymbols::y(unsigned i) const {
    return SparsePolynomial::variable(arity(), y_index(i));
}

SparsePolynomial CurveSymbols::a() const {
    return SparsePolynomial::variable(arity(), a_index());
}

SparsePolynomial CurveSymbols::b() const {
    return SparsePolynomial::variable(arity(), b_index());
}

SparsePolynomial CurveSymbols::constant(long value) const {
    return SparsePolynomial::constant(arity(), mpq_class(value));
}

std::vector<std::string> CurveSymbols::names() const {
    std::vector<std::string> out(arity(), "");
    for (unsigned i = 1; i <= n_; ++i) {
        out[y_index(i)] = "y" + std::to_string(i);
        out[x_index(i)] = "x" + std::to_string(i);
    }
    out[a_index()] = "a";
    out[b_index()] = "b";
    return out;
}

std::vector<FieldValue> CurveSymbols::assignment(std::span<const Point> points,
                                                 const Curve& curve) const {
    if (points.size() != n_) {
        throw ArityMismatchError("wrong number of points for this symbolic context");
    }
    std::vector<FieldValue> values(arity(), curve.field().zero());
    for (unsigned i = 1; i <= n_; ++i) {
        const Point& p = points[i - 1];
        if (p.is_infinity()) {
            throw NonGenericError("symbolic assignment needs affine points");
        }
        values[x_index(i)] = p.x();
        values[y_index(i)] = p.y();
    }
    values[a_index()] = curve.a();
    values[b_index()] = curve.b();
    return values;
}

namespace {

// Substitutes y^2 -> x^3 + a x + b for one point's y-variable, eliminating
// all exponents above 1 in a single pass.
SparsePolynomial substitute_y(const SparsePolynomial& f, const CurveSymbols& sym,
                              unsigned point_index, const Deadline* deadline) {
    const unsigned yi = sym.y_index(point_index);
    const unsigned max_deg = f.degree_in(yi);
    if (max_deg <= 1) return f;

    const SparsePolynomial rhs =
        sym.x(point_index).pow(3) + sym.a() * sym.x(point_index) + sym.b();
    std::vector<SparsePolynomial> rhs_pow;
    rhs_pow.push_back(SparsePolynomial::constant(sym.arity(), mpq_class(1)));
    for (unsigned q = 1; q <= max_deg / 2; ++q) {
        rhs_pow.push_back(rhs_pow.back() * rhs);
        if (deadline) deadline->check();
    }

    std::vector<SparsePolynomial::Term> out;
    out.reserve(f.term_count());
    size_t processed = 0;
    for (const auto& term : f.terms()) {
        if (deadline && (++processed & 1023) == 0) deadline->check();
        const unsigned e = term.mono.exp(yi);
        if (e <= 1) {
            out.push_back(term);
            continue;
        }
        const Monomial base = term.mono.with_exp(yi, e % 2);
        for (const auto& rt : rhs_pow[e / 2].terms()) {
            out.push_back({base * rt.mono, term.coeff * rt.coeff});
        }
    }
    return SparsePolynomial::from_terms(f.arity(), std::move(out));
}

SparsePolynomial normal_form_impl(const SparsePolynomial& f, const CurveSymbols& sym,
                                  std::span<const unsigned> y_order, const Deadline* deadline) {
    SparsePolynomial out = f;
    for (unsigned i : y_order) {
        out = substitute_y(out, sym, i, deadline);
        if (deadline) deadline->check();
    }
    return out;
}

std::vector<unsigned> default_y_order(const CurveSymbols& sym) {
    std::vector<unsigned> order(sym.n_points());
    for (unsigned i = 0; i < sym.n_points(); ++i) order[i] = i + 1;
    return order;
}

}  // namespace

SparsePolynomial curve_normal_form(const SparsePolynomial& f, const CurveSymbols& sym) {
    return normal_form_impl(f, sym, default_y_order(sym), nullptr);
}

SparsePolynomial curve_normal_form_ordered(const SparsePolynomial& f, const CurveSymbols& sym,
                                           std::span<const unsigned> y_order) {
    return normal_form_impl(f, sym, y_order, nullptr);
}

namespace {

bool check_identity_impl(const RationalExpression& lhs, const RationalExpression& rhs,
                         bool use_curve_relations, const CurveSymbols& sym,
                         const Deadline* deadline) {
    if (lhs.arity() != sym.arity() || rhs.arity() != sym.arity()) {
        throw ArityMismatchError("identity sides do not match the symbolic context");
    }
    const auto y_order = default_y_order(sym);
    if (use_curve_relations) {
        if (normal_form_impl(lhs.den(), sym, y_order, deadline).is_zero() ||
            normal_form_impl(rhs.den(), sym, y_order, deadline).is_zero()) {
            throw ZeroDenominatorError("denominator reduces to zero under the curve relations");
        }
    }
    SparsePolynomial diff = lhs.num() * rhs.den() - rhs.num() * lhs.den();
    if (deadline) deadline->check();
    if (use_curve_relations) {
        diff = normal_form_impl(diff, sym, y_order, deadline);
    }
    return diff.is_zero();
}

// The two chord additions composed symbolically, with denominators tracked
// explicitly as unreduced polynomial pairs.
struct ComposedTriple {
    CurveSymbols sym{3};
    SparsePolynomial x1, x2, x3, y1, y2, y3;
    SparsePolynomial V, c0, c1, c2;
    SparsePolynomial alpha_n, alpha_d;     // chord slope of (P1, P2)
    SparsePolynomial xt_n, xt_d;           // P1 + P2
    SparsePolynomial yt_n, yt_d;
    SparsePolynomial at_n, at_d;           // chord slope of (P1+P2, P3)
    SparsePolynomial x4_n, x4_d;           // (P1 + P2) + P3
    SparsePolynomial y4_n, y4_d;

    explicit ComposedTriple(const Deadline* deadline = nullptr)
        : x1(sym.x(1)),
          x2(sym.x(2)),
          x3(sym.x(3)),
          y1(sym.y(1)),
          y2(sym.y(2)),
          y3(sym.y(3)),
          V(sym_V(sym)),
          c0(sym_c0(sym)),
          c1(sym_c1(sym)),
          c2(sym_c2(sym)),
          alpha_n(y2 - y1),
          alpha_d(x2 - x1),
          xt_n(alpha_n * alpha_n - (x1 + x2) * alpha_d * alpha_d),
          xt_d(alpha_d * alpha_d),
          yt_n(-(y1 * alpha_d * xt_d) - alpha_n * (xt_n - x1 * xt_d)),
          yt_d(alpha_d * xt_d),
          at_n(y3 * yt_d - yt_n),
          // (y3 - yt)/(x3 - xt) with the common alpha_d^2 cancelled by hand.
          at_d(alpha_d * (x3 * xt_d - xt_n)),
          x4_n(SparsePolynomial(sym.arity())),
          x4_d(SparsePolynomial(sym.arity())),
          y4_n(SparsePolynomial(sym.arity())),
          y4_d(SparsePolynomial(sym.arity())) {
        if (deadline) deadline->check();
        const SparsePolynomial q = x3 * xt_d - xt_n;
        x4_d = at_d * at_d;
        x4_n = at_n * at_n - xt_n * (q * q) - x3 * x4_d;
        if (deadline) deadline->check();
        y4_d = at_d * x4_d;
        y4_n = -(y3 * y4_d) - at_n * (x4_n - x3 * x4_d);
        if (deadline) deadline->check();
    }
};

RationalExpression closed_form_x4(const ComposedTriple& t) {
    const SparsePolynomial c2sq = t.c2 * t.c2;
    const SparsePolynomial num =
        t.V * t.V - mpq_class(2) * (t.c1 * t.c2) - (t.x1 + t.x2 + t.x3) * c2sq;
    return RationalExpression(num, c2sq);
}

RationalExpression closed_form_y4(const ComposedTriple& t) {
    const RationalExpression x4 = closed_form_x4(t);
    const SparsePolynomial& nx = x4.num();
    const SparsePolynomial& dx = x4.den();
    const SparsePolynomial num =
        -(t.c2 * nx * nx + t.c1 * nx * dx + t.c0 * (dx * dx));
    return RationalExpression(num, t.V * dx * dx);
}

std::pair<RationalExpression, RationalExpression> build_identity_impl(BuiltinIdentity id,
                                                                      const Deadline* deadline) {
    ComposedTriple t(deadline);
    switch (id) {
        case BuiltinIdentity::Eq2: {
            RationalExpression lhs(t.c1 + (t.x1 + t.x2) * t.c2);
            RationalExpression rhs((t.x1 - t.x3) * (t.x3 - t.x2) * (t.y1 - t.y2));
            return {lhs, rhs};
        }
        case BuiltinIdentity::Lemma: {
            const RationalExpression alpha(t.alpha_n, t.alpha_d);
            const RationalExpression alpha_tilde(t.at_n, t.at_d);
            RationalExpression lhs = RationalExpression(t.c2) * (alpha + alpha_tilde);
            return {lhs, RationalExpression(t.V)};
        }
        case BuiltinIdentity::Theorem2X:
            return {RationalExpression(t.x4_n, t.x4_d), closed_form_x4(t)};
        case BuiltinIdentity::Theorem2Y:
            return {RationalExpression(t.y4_n, t.y4_d), closed_form_y4(t)};
        case BuiltinIdentity::DetM3: {
            // det of rows (1, x_i, x_i^2, y_i) and (1, x4, x4^2, -y4),
            // expanded along the last row; the 3x3 minors come from the
            // generic division-free determinant, not the expanded forms.
            const SparsePolynomial one = t.sym.constant(1);
            auto det3 = [&](auto entry) {
                std::vector<std::vector<SparsePolynomial>> rows;
                for (unsigned i = 1; i <= 3; ++i) {
                    rows.push_back({entry(i, 0), entry(i, 1), entry(i, 2)});
                }
                return cofactor_det(rows);
            };
            auto xi = [&](unsigned i) { return i == 1 ? t.x1 : (i == 2 ? t.x2 : t.x3); };
            auto yi = [&](unsigned i) { return i == 1 ? t.y1 : (i == 2 ? t.y2 : t.y3); };
            const SparsePolynomial m30 = det3([&](unsigned i, unsigned j) {
                return j == 0 ? xi(i) : (j == 1 ? xi(i) * xi(i) : yi(i));
            });
            const SparsePolynomial m31 = det3([&](unsigned i, unsigned j) {
                return j == 0 ? one : (j == 1 ? xi(i) * xi(i) : yi(i));
            });
            const SparsePolynomial m32 = det3([&](unsigned i, unsigned j) {
                return j == 0 ? one : (j == 1 ? xi(i) : yi(i));
            });
            const SparsePolynomial m33 = det3([&](unsigned i, unsigned j) {
                return j == 0 ? one : (j == 1 ? xi(i) : xi(i) * xi(i));
            });
            if (deadline) deadline->check();
            // det M = -m30 + x4 m31 - x4^2 m32 - y4 m33, cleared by at_d^4
            // (x4 = x4_n/at_d^2, y4 = y4_n/at_d^3).
            const SparsePolynomial at_d2 = t.at_d * t.at_d;
            const SparsePolynomial at_d4 = at_d2 * at_d2;
            if (deadline) deadline->check();
            SparsePolynomial cleared = -(m30 * at_d4);
            cleared = cleared + t.x4_n * m31 * at_d2;
            if (deadline) deadline->check();
            cleared = cleared - t.x4_n * t.x4_n * m32;
            if (deadline) deadline->check();
            cleared = cleared - t.y4_n * m33 * t.at_d;
            if (deadline) deadline->check();
            return {RationalExpression(cleared, at_d4),
                    RationalExpression(SparsePolynomial(t.sym.arity()))};
        }
    }
    throw Error("unknown builtin identity");
}

}  // namespace

const char* to_string(BuiltinIdentity id) {
    switch (id) {
        case BuiltinIdentity::Eq2: return "eq2";
        case BuiltinIdentity::Lemma: return "lemma";
        case BuiltinIdentity::Theorem2X: return "theorem2_x";
        case BuiltinIdentity::Theorem2Y: return "theorem2_y";
        case BuiltinIdentity::DetM3: return "detm3";
    }
    return "?";
}

std::pair<RationalExpression, RationalExpression> build_identity(BuiltinIdentity id) {
    return build_identity_impl(id, nullptr);
}

bool check_identity(const RationalExpression& lhs, const RationalExpression& rhs,
                    bool use_curve_relations, const CurveSymbols& sym) {
    return check_identity_impl(lhs, rhs, use_curve_relations, sym, nullptr);
}

bool check_builtin(BuiltinIdentity id, bool use_curve_relations) {
    const auto [lhs, rhs] = build_identity(id);
    return check_identity(lhs, rhs, use_curve_relations, CurveSymbols(3));
}

bool check_detm3_exact(std::optional<std::chrono::milliseconds> timeout) {
    if (!timeout) return check_builtin(BuiltinIdentity::DetM3, true);
    const Deadline deadline{Clock::now() + *timeout};
    const auto [lhs, rhs] = build_identity_impl(BuiltinIdentity::DetM3, &deadline);
    return check_identity_impl(lhs, rhs, true, CurveSymbols(3), &deadline);
}

SparsePolynomial sym_V(const CurveSymbols& sym) {
    const auto x1 = sym.x(1);
    const auto x2 = sym.x(2);
    const auto x3 = sym.x(3);
    return (x1 - x2) * (x2 - x3) * (x3 - x1);
}

SparsePolynomial sym_c0(const CurveSymbols& sym) {
    const auto x1 = sym.x(1);
    const auto x2 = sym.x(2);
    const auto x3 = sym.x(3);
    return x2 * x3 * (x3 - x2) * sym.y(1) + x1 * x3 * (x1 - x3) * sym.y(2) +
           x1 * x2 * (x2 - x1) * sym.y(3);
}

SparsePolynomial sym_c1(const CurveSymbols& sym) {
    const auto x1 = sym.x(1);
    const auto x2 = sym.x(2);
    const auto x3 = sym.x(3);
    return (x2 * x2 - x3 * x3) * sym.y(1) + (x3 * x3 - x1 * x1) * sym.y(2) +
           (x1 * x1 - x2 * x2) * sym.y(3);
}

SparsePolynomial sym_c2(const CurveSymbols& sym) {
    const auto x1 = sym.x(1);
    const auto x2 = sym.x(2);
    const auto x3 = sym.x(3);
    return (x3 - x2) * sym.y(1) + (x1 - x3) * sym.y(2) + (x2 - x1) * sym.y(3);
}

bool sz_check(const SzProgram& program, const SzOptions& options, uint64_t seed) {
    if (options.trials < 1) {
        throw Error("sz_check needs at least one trial");
    }
    const Field field = Field::prime_field(options.prime);
    for (int trial = 0; trial < options.trials; ++trial) {
        Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(trial));
        std::optional<FieldValue> value;
        for (int attempt = 0; attempt < options.max_resamples_per_trial && !value; ++attempt) {
            value = program(rng, field);
        }
        if (!value) {
            throw NonGenericError("sz_check sampler kept hitting degenerate configurations");
        }
        if (!value->is_zero()) return false;
    }
    return true;
}

bool sz_check_detm(int n, const SzOptions& options, uint64_t seed) {
    if (n < 2) {
        throw Error("det M vanishing needs n >= 2 points");
    }
    const SzProgram program = [n](Rng& rng, const Field& field) -> std::optional<FieldValue> {
        const FieldValue a = field.sample(rng);
        const FieldValue b = field.sample(rng);
        const FieldValue disc =
            field.from_int(4) * a * a * a + field.from_int(27) * b * b;
        if (disc.is_zero()) return std::nullopt;
        const Curve curve(a, b);
        const PointSampler sampler(curve);
        std::vector<Point> points;
        points.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) points.push_back(sampler.sample(rng));
        // Keep the fold on chord steps, mirroring what "generic" means for
        // the closed forms.
        Point acc = points[0];
        for (size_t i = 1; i < points.size(); ++i) {
            if (curve.addition_case(acc, points[i]) != AdditionCase::Chord) return std::nullopt;
            acc = curve.add(acc, points[i]);
        }
        if (acc.is_infinity()) return std::nullopt;
        return det_exact(sum_matrix(points, acc));
    };
    return sz_check(program, options, seed);
}

}  // namespace ecsum
