#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <utility>

#include "ecsum/curve.hpp"
#include "ecsum/poly.hpp"

namespace ecsum {

// Unreduced fraction of polynomials. Equality is decided by
// cross-multiplication, so no multivariate gcd is ever needed.
class RationalExpression {
  public:
    RationalExpression(SparsePolynomial num, SparsePolynomial den);
    explicit RationalExpression(SparsePolynomial num);

    const SparsePolynomial& num() const { return num_; }
    const SparsePolynomial& den() const { return den_; }
    unsigned arity() const { return num_.arity(); }

    friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator-(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);
    friend RationalExpression operator/(const RationalExpression& a, const RationalExpression& b);
    RationalExpression operator-() const;

  private:
    SparsePolynomial num_;
    SparsePolynomial den_;
};

// Symbolic setting for identities about n curve points: variables
// y1..yn, x1..xn, a, b (y-variables first, so the graded-lex leading term
// shows normal-form progress). Accessors hide the index layout.
class CurveSymbols {
  public:
    explicit CurveSymbols(unsigned n_points);

    unsigned n_points() const { return n_; }
    unsigned arity() const { return 2 * n_ + 2; }

    SparsePolynomial x(unsigned i) const;  // 1-based
    SparsePolynomial y(unsigned i) const;  // 1-based
    SparsePolynomial a() const;
    SparsePolynomial b() const;
    SparsePolynomial constant(long value) const;

    unsigned x_index(unsigned i) const;
    unsigned y_index(unsigned i) const;
    unsigned a_index() const { return 2 * n_; }
    unsigned b_index() const { return 2 * n_ + 1; }

    std::vector<std::string> names() const;

    // Assignment vector in this context's variable order for a concrete
    // configuration of points on a concrete curve.
    std::vector<FieldValue> assignment(std::span<const Point> points, const Curve& curve) const;

  private:
    unsigned n_;
};

// Reduces every y_i-power through y_i^2 -> x_i^3 + a x_i + b until all
// y-degrees are <= 1. The rewrite rules touch disjoint variables, so the
// normal form is unique regardless of substitution order.
SparsePolynomial curve_normal_form(const SparsePolynomial& f, const CurveSymbols& sym);

// Same reduction, but processing the y-variables in a caller-given order;
// exposed for the confluence tests.
SparsePolynomial curve_normal_form_ordered(const SparsePolynomial& f, const CurveSymbols& sym,
                                           std::span<const unsigned> y_order);

// lhs = rhs as rational functions, optionally modulo the curve relations:
// forms lhs.num*rhs.den - rhs.num*lhs.den, normal-forms it when requested,
// and tests for the zero polynomial. ZeroDenominatorError if a denominator
// is (or reduces to) zero.
bool check_identity(const RationalExpression& lhs, const RationalExpression& rhs,
                    bool use_curve_relations, const CurveSymbols& sym);

// The built-in identities about a generic triple (all with n_points = 3):
//   Eq2:       c1 + (x1+x2) c2 = (x1-x3)(x3-x2)(y1-y2)      (no relations)
//   Lemma:     c2 (alpha + alpha~) = V                       (needs relations)
//   Theorem2X: composed x4 = -x1-x2-x3 + (V^2-2c1c2)/c2^2    (needs relations)
//   Theorem2Y: composed y4 = -(c2 x4^2 + c1 x4 + c0)/V       (needs relations)
//   DetM3:     det of rows (1,x_i,x_i^2,y_i), (1,x4,x4^2,-y4) = 0
// "Composed" means x4, y4 built literally from two chord additions, so each
// check pits the addition law against the determinant form.
enum class BuiltinIdentity { Eq2, Lemma, Theorem2X, Theorem2Y, DetM3 };

const char* to_string(BuiltinIdentity id);

std::pair<RationalExpression, RationalExpression> build_identity(BuiltinIdentity id);

bool check_builtin(BuiltinIdentity id, bool use_curve_relations);

// Symbolic triple coefficients (expanded forms, mirroring triple_coeffs).
SparsePolynomial sym_V(const CurveSymbols& sym);
SparsePolynomial sym_c0(const CurveSymbols& sym);
SparsePolynomial sym_c1(const CurveSymbols& sym);
SparsePolynomial sym_c2(const CurveSymbols& sym);

// Randomized polynomial identity testing. A trial program evaluates the
// cleared identity at a random configuration over F_prime (sampling points
// on a random curve, so the curve relations hold by construction) and
// returns nullopt to ask for a resample. A nonzero polynomial of total
// degree D passes k trials with probability <= (D/prime)^k.
struct SzOptions {
    int trials = 20;
    mpz_class prime = (mpz_class(1) << 61) - 1;
    int max_resamples_per_trial = 1000;
};

using SzProgram = std::function<std::optional<FieldValue>(Rng& rng, const Field& field)>;

bool sz_check(const SzProgram& program, const SzOptions& options, uint64_t seed);

// Built-in program: det M = 0 for the n-point sum, evaluated concretely.
bool sz_check_detm(int n, const SzOptions& options, uint64_t seed);

// Signals that an exact expansion exceeded its deadline; the prover falls
// back to sz_check.
class ExpansionTimeout : public Error {
  public:
    using Error::Error;
};

// DetM3 with a deadline on the exact expansion (the default path); throws
// ExpansionTimeout when exceeded.
bool check_detm3_exact(std::optional<std::chrono::milliseconds> timeout);

}  // namespace ecsum
