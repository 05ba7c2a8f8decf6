#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ecsum/errors.hpp"
#include "ecsum/rng.hpp"

namespace ecsum {

class FieldValue;

enum class FieldKind { Rationals, PrimeField };

// Immutable field descriptor: the rationals Q, or F_p for an odd prime p > 3.
// Characteristic 2 and 3 are excluded so that the tangent slope
// (3x^2 + a)/(2y) is meaningful.
class Field {
  public:
    static Field rationals();

    // Validates p with a probabilistic primality test; rejects p <= 3.
    static Field prime_field(const mpz_class& p);

    // "Q" or "Fp:<decimal prime>", e.g. "Fp:10007".
    static Field parse(std::string_view text);

    FieldKind kind() const { return impl_->kind; }
    bool is_rationals() const { return impl_->kind == FieldKind::Rationals; }
    bool is_prime_field() const { return impl_->kind == FieldKind::PrimeField; }

    // PrimeField only.
    const mpz_class& modulus() const;

    std::string to_string() const;

    FieldValue zero() const;
    FieldValue one() const;
    FieldValue from_int(long value) const;
    FieldValue from_integer(const mpz_class& value) const;
    FieldValue from_fraction(const mpz_class& num, const mpz_class& den) const;

    // Canonical text: decimal residue for F_p, "num/den" (or "num") for Q.
    // Accepts either form over either field; fractions over F_p are resolved
    // by modular division.
    FieldValue parse_value(std::string_view text) const;

    // Deterministic for a fixed rng state. F_p: uniform residue. Q: reduced
    // fraction with |numerator|, denominator <= height.
    FieldValue sample(Rng& rng, unsigned long height = 10) const;

    friend bool operator==(const Field& a, const Field& b) {
        if (a.impl_ == b.impl_) return true;
        return a.impl_->kind == b.impl_->kind && a.impl_->modulus == b.impl_->modulus;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    struct Impl {
        FieldKind kind;
        mpz_class modulus;  // 0 for Q
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    bool same_impl(const Field& other) const { return impl_ == other.impl_; }

    std::shared_ptr<const Impl> impl_;

    friend class FieldValue;
};

// An exact element of Q or F_p, always in canonical form: reduced fraction
// with positive denominator, or residue in [0, p-1]. Equality is structural.
class FieldValue {
  public:
    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    std::string to_string() const;

    // Rationals payload; call only when field().is_rationals().
    const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
    // Prime-field payload; call only when field().is_prime_field().
    const mpz_class& residue() const { return std::get<mpz_class>(payload_); }

    FieldValue inv() const;  // DivisionByZeroError on zero
    FieldValue pow(unsigned long exponent) const;

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    FieldValue operator-() const;

    FieldValue& operator+=(const FieldValue& b) { return *this = *this + b; }
    FieldValue& operator-=(const FieldValue& b) { return *this = *this - b; }
    FieldValue& operator*=(const FieldValue& b) { return *this = *this * b; }

    // Values over different fields are never equal.
    friend bool operator==(const FieldValue& a, const FieldValue& b);
    friend bool operator!=(const FieldValue& a, const FieldValue& b) { return !(a == b); }

  private:
    FieldValue(Field field, mpq_class q) : field_(std::move(field)), payload_(std::move(q)) {}
    FieldValue(Field field, mpz_class r) : field_(std::move(field)), payload_(std::move(r)) {}

    static void require_same_field(const FieldValue& a, const FieldValue& b);

    Field field_;
    std::variant<mpq_class, mpz_class> payload_;

    friend class Field;
};

}  // namespace ecsum
