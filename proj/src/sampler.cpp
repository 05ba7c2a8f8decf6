#include "ecsum/sampler.hpp"

namespace ecsum {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& e, const mpz_class& p) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
}

}  // namespace

std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p) {
    mpz_class v;
    mpz_mod(v.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (v == 0) return mpz_class(0);
    if (powm(v, (p - 1) / 2, p) != 1) return std::nullopt;

    mpz_class root;
    if (p % 4 == 3) {
        root = powm(v, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. Factor p - 1 = q * 2^s with q odd.
        mpz_class q = p - 1;
        unsigned long s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        // Smallest quadratic non-residue as the auxiliary generator;
        // deterministic, and fast for any realistic prime.
        mpz_class z = 2;
        while (powm(z, (p - 1) / 2, p) != p - 1) ++z;

        mpz_class m(s);
        mpz_class c = powm(z, q, p);
        mpz_class t = powm(v, q, p);
        root = powm(v, (q + 1) / 2, p);
        while (t != 1) {
            mpz_class t2 = t;
            mpz_class i = 0;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            mpz_class exp = m - i - 1;
            mpz_class b = c;
            for (mpz_class j = 0; j < exp; ++j) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            root = root * b % p;
        }
    }
    const mpz_class other = p - root;
    return root <= other ? root : other;
}

PointSampler::PointSampler(Curve curve) : curve_(std::move(curve)) {
    if (!curve_.field().is_prime_field()) {
        throw Error("PointSampler needs a prime-field curve; use the rational corpus over Q");
    }
}

Point PointSampler::sample(Rng& rng) const {
    const Field& f = curve_.field();
    const mpz_class& p = f.modulus();
    for (;;) {
        const FieldValue x = f.sample(rng);
        const FieldValue rhs = x * x * x + curve_.a() * x + curve_.b();
        const auto root = sqrt_mod(rhs.residue(), p);
        if (!root) continue;
        FieldValue y = f.from_integer(*root);
        if (rng.flip()) y = -y;
        return Point::affine(x, y);
    }
}

Curve rational_corpus_curve() {
    const Field q = Field::rationals();
    return Curve(q.from_int(0), q.from_int(17));
}

std::vector<Point> rational_corpus_base_points() {
    const Field q = Field::rationals();
    auto pt = [&](long x, long y) { return Point::affine(q.from_int(x), q.from_int(y)); };
    return {pt(-2, 3), pt(-1, 4), pt(2, 5), pt(4, 9), pt(8, 23)};
}

Point sample_rational_corpus_point(Rng& rng, int max_multiplier) {
    static const Curve curve = rational_corpus_curve();
    static const std::vector<Point> bases = rational_corpus_base_points();
    const Point& base = bases[rng.below(bases.size())];
    const long k = static_cast<long>(rng.below(static_cast<uint64_t>(max_multiplier))) + 1;
    Point result = curve.scalar_mul(k, base);
    // Small multiples of these bases never hit O (none has order <= 4 here),
    // but guard anyway.
    if (result.is_infinity()) return base;
    if (rng.flip()) result = result.negated();
    return result;
}

Point sample_point(const Curve& curve, Rng& rng) {
    if (curve.field().is_prime_field()) {
        return PointSampler(curve).sample(rng);
    }
    if (curve == rational_corpus_curve()) {
        return sample_rational_corpus_point(rng);
    }
    throw Error("no point sampler for rational curves other than y^2 = x^3 + 17");
}

}  // namespace ecsum
