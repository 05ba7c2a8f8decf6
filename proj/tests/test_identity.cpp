#include <doctest.h>

#include "ecsum/identity.hpp"
#include "ecsum/linalg.hpp"
#include "ecsum/multisum.hpp"
#include "ecsum/sampler.hpp"

using namespace ecsum;

namespace {

// Random sparse polynomial over the symbolic context.
SparsePolynomial random_poly(const CurveSymbols& sym, Rng& rng) {
    std::vector<SparsePolynomial::Term> terms;
    const unsigned count = 1 + static_cast<unsigned>(rng.below(8));
    for (unsigned t = 0; t < count; ++t) {
        Monomial m(sym.arity());
        for (unsigned v = 0; v < sym.arity(); ++v) {
            m = m.with_exp(v, static_cast<unsigned>(rng.below(4)));
        }
        const long c = static_cast<long>(rng.below(19)) - 9;
        terms.push_back({m, mpq_class(c)});
    }
    return SparsePolynomial::from_terms(sym.arity(), std::move(terms));
}

}  // namespace

TEST_CASE("the curve relation itself reduces to zero") {
    const CurveSymbols sym(3);
    const SparsePolynomial rel =
        sym.y(1) * sym.y(1) - sym.x(1).pow(3) - sym.a() * sym.x(1) - sym.b();
    CHECK(curve_normal_form(rel, sym).is_zero());
}

TEST_CASE("odd powers keep one y factor") {
    const CurveSymbols sym(3);
    const SparsePolynomial expect =
        sym.y(1) * (sym.x(1).pow(3) + sym.a() * sym.x(1) + sym.b());
    CHECK(curve_normal_form(sym.y(1).pow(3), sym) == expect);
}

TEST_CASE("the slope-sum reduction reaches V*(x1+x2+x3)") {
    const CurveSymbols sym(3);
    const auto x1 = sym.x(1);
    const auto x2 = sym.x(2);
    const auto x3 = sym.x(3);
    const auto sq = [&](unsigned i) { return sym.y(i) * sym.y(i); };
    const SparsePolynomial lhs =
        (x3 - x2) * (sq(1) - sq(3)) - (x1 - x3) * (sq(3) - sq(2));
    const SparsePolynomial rhs = sym_V(sym) * (x1 + x2 + x3);
    CHECK(curve_normal_form(lhs - rhs, sym).is_zero());
    // Without the relations the two sides differ as polynomials.
    CHECK(lhs != rhs);
}

TEST_CASE("normal form is idempotent and order-independent") {
    const CurveSymbols sym(3);
    Rng rng(1234);
    const std::vector<unsigned> forward = {1, 2, 3};
    const std::vector<unsigned> backward = {3, 2, 1};
    const std::vector<unsigned> mixed = {2, 3, 1};
    for (int trial = 0; trial < 1000; ++trial) {
        const SparsePolynomial f = random_poly(sym, rng);
        const SparsePolynomial nf = curve_normal_form(f, sym);
        CHECK(curve_normal_form(nf, sym) == nf);
        CHECK(curve_normal_form_ordered(f, sym, backward) == nf);
        CHECK(curve_normal_form_ordered(f, sym, mixed) == nf);
        for (unsigned i = 1; i <= 3; ++i) {
            CHECK(nf.degree_in(sym.y_index(i)) <= 1);
        }
    }
}

TEST_CASE("normal form preserves values on curve points") {
    const Field field = Field::prime_field(10007);
    const Curve curve(field.from_int(1), field.from_int(1));
    const PointSampler sampler(curve);
    const CurveSymbols sym(3);
    Rng rng(5678);
    for (int trial = 0; trial < 1000; ++trial) {
        const SparsePolynomial f = random_poly(sym, rng);
        const SparsePolynomial nf = curve_normal_form(f, sym);
        const std::vector<Point> points = {sampler.sample(rng), sampler.sample(rng),
                                           sampler.sample(rng)};
        const auto at = sym.assignment(points, curve);
        REQUIRE(f.evaluate(at) == nf.evaluate(at));
    }
}

TEST_CASE("chord-coefficient identity holds without curve relations") {
    CHECK(check_builtin(BuiltinIdentity::Eq2, false));
    CHECK(check_builtin(BuiltinIdentity::Eq2, true));
}

TEST_CASE("slope-sum identity needs the curve relations (sharpness)") {
    CHECK(check_builtin(BuiltinIdentity::Lemma, true));
    CHECK_FALSE(check_builtin(BuiltinIdentity::Lemma, false));
}

TEST_CASE("closed-form coordinates match the composed additions") {
    CHECK(check_builtin(BuiltinIdentity::Theorem2X, true));
    CHECK(check_builtin(BuiltinIdentity::Theorem2Y, true));
    CHECK_FALSE(check_builtin(BuiltinIdentity::Theorem2X, false));
    CHECK_FALSE(check_builtin(BuiltinIdentity::Theorem2Y, false));
}

TEST_CASE("the mirrored sum lies on the parabola: det M = 0 symbolically") {
    CHECK(check_builtin(BuiltinIdentity::DetM3, true));
    CHECK_FALSE(check_builtin(BuiltinIdentity::DetM3, false));
}

TEST_CASE("composed coordinates evaluate to the worked F_5 sum") {
    // Pins the symbolic construction to concrete arithmetic.
    const auto [lhs_x, rhs_x] = build_identity(BuiltinIdentity::Theorem2X);
    const auto [lhs_y, rhs_y] = build_identity(BuiltinIdentity::Theorem2Y);
    const Field f5 = Field::prime_field(5);
    const Curve e5(f5.from_int(1), f5.from_int(1));
    const std::vector<Point> triple = {Point::affine(f5.from_int(0), f5.from_int(1)),
                                       Point::affine(f5.from_int(2), f5.from_int(1)),
                                       Point::affine(f5.from_int(4), f5.from_int(2))};
    const CurveSymbols sym(3);
    const auto at = sym.assignment(triple, e5);
    for (const auto* re : {&lhs_x, &rhs_x}) {
        CHECK(re->num().evaluate(at) / re->den().evaluate(at) == f5.from_int(2));
    }
    for (const auto* re : {&lhs_y, &rhs_y}) {
        CHECK(re->num().evaluate(at) / re->den().evaluate(at) == f5.from_int(4));
    }
}

TEST_CASE("a zero denominator in an identity is reported") {
    const CurveSymbols sym(3);
    CHECK_THROWS_AS(RationalExpression(sym.x(1), SparsePolynomial(sym.arity())),
                    ZeroDenominatorError);
    // y1^2 - x1^3 - a x1 - b is nonzero as a polynomial but reduces to zero.
    const SparsePolynomial hidden_zero =
        sym.y(1) * sym.y(1) - sym.x(1).pow(3) - sym.a() * sym.x(1) - sym.b();
    const RationalExpression bad(sym.x(1), hidden_zero);
    const RationalExpression ok(sym.x(1));
    CHECK_THROWS_AS((void)check_identity(bad, ok, true, sym), ZeroDenominatorError);
    CHECK_NOTHROW((void)check_identity(bad, ok, false, sym));
}

TEST_CASE("randomized vanishing check accepts the truth and catches a perturbation") {
    SzOptions options;
    options.trials = 20;
    CHECK(sz_check_detm(4, options, 42));
    CHECK(sz_check_detm(3, options, 43));

    // Negative control: same evaluation with one cofactor nudged by 1.
    const SzProgram perturbed = [](Rng& rng, const Field& field) -> std::optional<FieldValue> {
        const FieldValue a = field.sample(rng);
        const FieldValue b = field.sample(rng);
        if ((field.from_int(4) * a * a * a + field.from_int(27) * b * b).is_zero()) {
            return std::nullopt;
        }
        const Curve curve(a, b);
        const PointSampler sampler(curve);
        std::vector<Point> points;
        for (int i = 0; i < 4; ++i) points.push_back(sampler.sample(rng));
        Point acc = points[0];
        for (size_t i = 1; i < points.size(); ++i) {
            if (curve.addition_case(acc, points[i]) != AdditionCase::Chord) return std::nullopt;
            acc = curve.add(acc, points[i]);
        }
        if (acc.is_infinity()) return std::nullopt;
        Matrix m = sum_matrix(points, acc);
        m[0][0] = m[0][0] + field.one();
        return det_exact(m);
    };
    CHECK_FALSE(sz_check(perturbed, options, 44));

    // The zero program trivially passes.
    const SzProgram zero = [](Rng&, const Field& field) { return field.zero(); };
    CHECK(sz_check(zero, options, 45));
}

TEST_CASE("bad primes are rejected up front") {
    SzOptions options;
    options.prime = 91;  // 7 * 13
    CHECK_THROWS_AS((void)sz_check_detm(3, options, 1), BadPrimeError);
    options.prime = 3;
    CHECK_THROWS_AS((void)sz_check_detm(3, options, 1), BadPrimeError);
}

TEST_CASE("identity names round-trip") {
    CHECK(std::string(to_string(BuiltinIdentity::Eq2)) == "eq2");
    CHECK(std::string(to_string(BuiltinIdentity::DetM3)) == "detm3");
}
