#include "ecsum/field.hpp"

#include <utility>

namespace ecsum {

namespace {

mpz_class mod_reduce(const mpz_class& value, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Uniform integer in [0, bound) from 64-bit chunks with rejection.
mpz_class random_below(Rng& rng, const mpz_class& bound) {
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    const unsigned top_bits = bits % 64 == 0 ? 64 : static_cast<unsigned>(bits % 64);
    const uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    for (;;) {
        mpz_class r = 0;
        for (size_t i = 0; i < words; ++i) {
            uint64_t w = rng.next();
            if (i == 0) w &= top_mask;
            r <<= 64;
            r += mpz_class(static_cast<unsigned long>(w));
        }
        if (r < bound) return r;
    }
}

bool parse_integer(std::string_view text, mpz_class& out) {
    if (text.empty()) return false;
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos >= text.size()) return false;
    mpz_class acc = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') return false;
        acc *= 10;
        acc += c - '0';
    }
    out = negative ? mpz_class(-acc) : acc;
    return true;
}

}  // namespace

Field Field::rationals() {
    static const std::shared_ptr<const Impl> impl =
        std::make_shared<Impl>(Impl{FieldKind::Rationals, mpz_class(0)});
    return Field(impl);
}

Field Field::prime_field(const mpz_class& p) {
    if (p <= 3) {
        throw BadPrimeError("modulus must be a prime > 3, got " + p.get_str());
    }
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        throw BadPrimeError("modulus is not prime: " + p.get_str());
    }
    return Field(std::make_shared<Impl>(Impl{FieldKind::PrimeField, p}));
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        mpz_class p;
        if (!parse_integer(text.substr(prefix.size()), p) || p <= 0) {
            throw ParseError("bad field descriptor: " + std::string(text));
        }
        return prime_field(p);
    }
    throw ParseError("bad field descriptor (want \"Q\" or \"Fp:<prime>\"): " + std::string(text));
}

const mpz_class& Field::modulus() const {
    if (!is_prime_field()) {
        throw Error("modulus() called on the rational field");
    }
    return impl_->modulus;
}

std::string Field::to_string() const {
    return is_rationals() ? "Q" : "Fp:" + impl_->modulus.get_str();
}

FieldValue Field::zero() const { return from_int(0); }

FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(long value) const { return from_integer(mpz_class(value)); }

FieldValue Field::from_integer(const mpz_class& value) const {
    if (is_rationals()) {
        return FieldValue(*this, mpq_class(value));
    }
    return FieldValue(*this, mod_reduce(value, impl_->modulus));
}

FieldValue Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) {
        throw DivisionByZeroError("fraction with zero denominator");
    }
    if (is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldValue(*this, std::move(q));
    }
    return from_integer(num) / from_integer(den);
}

FieldValue Field::parse_value(std::string_view text) const {
    const size_t slash = text.find('/');
    mpz_class num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw ParseError("bad field value: " + std::string(text));
        }
        return from_integer(num);
    }
    mpz_class den;
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den) || den == 0) {
        throw ParseError("bad field value: " + std::string(text));
    }
    return from_fraction(num, den);
}

FieldValue Field::sample(Rng& rng, unsigned long height) const {
    if (is_prime_field()) {
        return FieldValue(*this, random_below(rng, impl_->modulus));
    }
    if (height == 0) {
        throw Error("rational sampling needs a positive height bound");
    }
    const mpz_class bound(height);
    const mpz_class num = random_below(rng, 2 * bound + 1) - bound;
    const mpz_class den = random_below(rng, bound) + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return FieldValue(*this, std::move(q));
}

void FieldValue::require_same_field(const FieldValue& a, const FieldValue& b) {
    if (a.field_.same_impl(b.field_) || a.field_ == b.field_) return;
    throw FieldMismatchError("operands from different fields: " + a.field_.to_string() + " vs " +
                             b.field_.to_string());
}

bool FieldValue::is_zero() const {
    if (field_.is_rationals()) return rational() == 0;
    return residue() == 0;
}

bool FieldValue::is_one() const {
    if (field_.is_rationals()) return rational() == 1;
    return residue() == 1;
}

std::string FieldValue::to_string() const {
    if (field_.is_prime_field()) return residue().get_str();
    const mpq_class& q = rational();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldValue FieldValue::inv() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero");
    }
    if (field_.is_rationals()) {
        return FieldValue(field_, mpq_class(1) / rational());
    }
    mpz_class r;
    mpz_invert(r.get_mpz_t(), residue().get_mpz_t(), field_.modulus().get_mpz_t());
    return FieldValue(field_, std::move(r));
}

FieldValue FieldValue::pow(unsigned long exponent) const {
    if (field_.is_prime_field()) {
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), residue().get_mpz_t(), exponent,
                    field_.modulus().get_mpz_t());
        return FieldValue(field_, std::move(r));
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), rational().get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), rational().get_den().get_mpz_t(), exponent);
    return FieldValue(field_, mpq_class(num) / mpq_class(den));
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    FieldValue::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return FieldValue(a.field_, mpq_class(a.rational() + b.rational()));
    }
    mpz_class r = a.residue() + b.residue();
    if (r >= a.field_.modulus()) r -= a.field_.modulus();
    return FieldValue(a.field_, std::move(r));
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) {
    FieldValue::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return FieldValue(a.field_, mpq_class(a.rational() - b.rational()));
    }
    mpz_class r = a.residue() - b.residue();
    if (r < 0) r += a.field_.modulus();
    return FieldValue(a.field_, std::move(r));
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    FieldValue::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return FieldValue(a.field_, mpq_class(a.rational() * b.rational()));
    }
    mpz_class r;
    mpz_mul(r.get_mpz_t(), a.residue().get_mpz_t(), b.residue().get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), a.field_.modulus().get_mpz_t());
    return FieldValue(a.field_, std::move(r));
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inv(); }

FieldValue FieldValue::operator-() const {
    if (field_.is_rationals()) {
        return FieldValue(field_, mpq_class(-rational()));
    }
    if (residue() == 0) return *this;
    return FieldValue(field_, mpz_class(field_.modulus() - residue()));
}

bool operator==(const FieldValue& a, const FieldValue& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_.is_rationals()) return a.rational() == b.rational();
    return a.residue() == b.residue();
}

}  // namespace ecsum
