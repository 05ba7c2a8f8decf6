#pragma once

#include <optional>
#include <vector>

#include "ecsum/curve.hpp"
#include "ecsum/rng.hpp"

namespace ecsum {

// Square root mod an odd prime (Tonelli-Shanks), or nullopt for a
// non-residue. Returns the smaller of the two roots.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p);

// Random affine points on a prime-field curve: draw x until x^3 + ax + b is
// a square (Euler criterion), take the smaller root, then flip the sign with
// one more rng bit so both halves of the curve are reachable.
class PointSampler {
  public:
    explicit PointSampler(Curve curve);

    const Curve& curve() const { return curve_; }

    Point sample(Rng& rng) const;

  private:
    Curve curve_;
};

// Exact rational test corpus: y^2 = x^3 + 17 has the integral points
// (-2,3), (-1,4), (2,5), (4,9), (8,23), all verifiable by substitution.
Curve rational_corpus_curve();
std::vector<Point> rational_corpus_base_points();

// Random small multiple k*B of a corpus base point, k in [1, max_multiplier],
// with a random sign. Never returns O.
Point sample_rational_corpus_point(Rng& rng, int max_multiplier = 4);

// Curve-appropriate sampling: PointSampler for F_p, the corpus for Q
// (the curve must then be y^2 = x^3 + 17).
Point sample_point(const Curve& curve, Rng& rng);

}  // namespace ecsum
