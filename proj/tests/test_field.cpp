#include <doctest.h>

#include "ecsum/field.hpp"

using namespace ecsum;

TEST_CASE("rational arithmetic in canonical form") {
    const Field q = Field::rationals();
    const FieldValue a = q.from_fraction(2, 3);
    const FieldValue b = q.from_fraction(1, 6);
    CHECK((a + b).to_string() == "5/6");
    CHECK((a * b).to_string() == "1/9");
    CHECK((a - a).is_zero());
    CHECK(q.from_fraction(-3, 7).inv().to_string() == "-7/3");
    CHECK(q.from_fraction(4, -6).to_string() == "-2/3");  // denominator kept positive
    CHECK(q.from_fraction(0, 5) == q.zero());
}

TEST_CASE("prime field arithmetic") {
    const Field f5 = Field::prime_field(5);
    CHECK((f5.from_int(4) * f5.from_int(4)).to_string() == "1");
    CHECK((-Field::prime_field(7).from_int(0)).is_zero());
    CHECK(f5.from_int(4).inv() == f5.from_int(4));
    CHECK(f5.from_int(2).inv() == f5.from_int(3));
    CHECK(f5.from_int(-3) == f5.from_int(2));
    CHECK(f5.from_fraction(1, 2) == f5.from_int(3));
}

TEST_CASE("division by zero is an error, never a value") {
    const Field q = Field::rationals();
    const Field f5 = Field::prime_field(5);
    CHECK_THROWS_AS((void)q.zero().inv(), DivisionByZeroError);
    CHECK_THROWS_AS((void)(f5.one() / f5.zero()), DivisionByZeroError);
    CHECK_THROWS_AS((void)q.from_fraction(1, 0), DivisionByZeroError);
}

TEST_CASE("mixing descriptors is rejected") {
    const Field f5 = Field::prime_field(5);
    const Field f7 = Field::prime_field(7);
    CHECK_THROWS_AS((void)(f5.one() + f7.one()), FieldMismatchError);
    CHECK_THROWS_AS((void)(f5.one() * Field::rationals().one()), FieldMismatchError);
    CHECK(f5.one() != f7.one());
}

TEST_CASE("descriptor construction validates the modulus") {
    CHECK_THROWS_AS((void)Field::prime_field(4), BadPrimeError);
    CHECK_THROWS_AS((void)Field::prime_field(3), BadPrimeError);
    CHECK_THROWS_AS((void)Field::prime_field(2), BadPrimeError);
    CHECK_THROWS_AS((void)Field::prime_field(10006), BadPrimeError);
    CHECK_NOTHROW((void)Field::prime_field(10007));
    CHECK_NOTHROW((void)Field::prime_field((mpz_class(1) << 61) - 1));
}

TEST_CASE("descriptor text form round-trips") {
    CHECK(Field::parse("Q").is_rationals());
    const Field f = Field::parse("Fp:10007");
    CHECK(f.modulus() == 10007);
    CHECK(f.to_string() == "Fp:10007");
    CHECK(Field::rationals().to_string() == "Q");
    CHECK_THROWS_AS((void)Field::parse("GF:5"), ParseError);
    CHECK_THROWS_AS((void)Field::parse("Fp:abc"), ParseError);
}

TEST_CASE("value parsing accepts decimals and fractions") {
    const Field q = Field::rationals();
    CHECK(q.parse_value("-3/7") == q.from_fraction(-3, 7));
    CHECK(q.parse_value("42") == q.from_int(42));
    const Field f5 = Field::prime_field(5);
    CHECK(f5.parse_value("7") == f5.from_int(2));
    CHECK(f5.parse_value("-1") == f5.from_int(4));
    CHECK_THROWS_AS((void)q.parse_value("1/2x"), ParseError);
    CHECK_THROWS_AS((void)q.parse_value("1//2"), ParseError);
    CHECK_THROWS_AS((void)q.parse_value(""), ParseError);
}

TEST_CASE("sampling is deterministic, in range, and height-bounded") {
    const Field f5 = Field::prime_field(5);
    Rng rng1(12345);
    Rng rng2(12345);
    for (int i = 0; i < 100; ++i) {
        const FieldValue v1 = f5.sample(rng1);
        const FieldValue v2 = f5.sample(rng2);
        CHECK(v1 == v2);
        CHECK(v1.residue() >= 0);
        CHECK(v1.residue() < 5);
    }
    const Field q = Field::rationals();
    Rng rng3(99);
    for (int i = 0; i < 200; ++i) {
        const FieldValue v = q.sample(rng3, 10);
        CHECK(abs(v.rational().get_num()) <= 10);
        CHECK(v.rational().get_den() >= 1);
        CHECK(v.rational().get_den() <= 10);
    }
}

TEST_CASE("field axioms hold on random triples") {
    for (const Field& f : {Field::rationals(), Field::prime_field(10007)}) {
        Rng rng(2024);
        for (int i = 0; i < 1000; ++i) {
            const FieldValue a = f.sample(rng, 50);
            const FieldValue b = f.sample(rng, 50);
            const FieldValue c = f.sample(rng, 50);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + (-a)).is_zero());
            if (!a.is_zero()) {
                REQUIRE(a * a.inv() == f.one());
            }
        }
    }
}

TEST_CASE("canonical form is stable under re-canonicalization") {
    const Field q = Field::rationals();
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const FieldValue v = q.sample(rng, 1000);
        const FieldValue again =
            q.from_fraction(v.rational().get_num(), v.rational().get_den());
        CHECK(v == again);
        CHECK(v.to_string() == again.to_string());
    }
    const Field fp = Field::prime_field(10007);
    Rng rng2(8);
    for (int i = 0; i < 200; ++i) {
        const FieldValue v = fp.sample(rng2);
        CHECK(fp.from_integer(v.residue()) == v);
    }
}
