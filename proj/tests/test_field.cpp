#include <doctest.h>

#include "cdgaw/field.hpp"
#include "test_support.hpp"

using namespace cdgaw;

TEST_CASE("default field is Q(zeta_12) with i = z^3 and sqrt3 = 2z - z^3") {
    Field f = Field::default_field();
    CHECK(f.degree() == 4);
    Scalar z = f.generator();
    Scalar i = f.imaginary_unit();
    CHECK(i == z.pow(3));
    CHECK(i * i == f.integer(-1));
    Scalar r3 = f.sqrt3();
    CHECK(r3 == f.integer(2) * z - z.pow(3));
    CHECK(r3 * r3 == f.integer(3));
    CHECK(i.conj() == -i);
    CHECK(r3.conj() == r3);
}

TEST_CASE("mul(z, z - z^3) = 1 in the default field") {
    Field f = Field::default_field();
    Scalar z = f.generator();
    CHECK(z * (z - z.pow(3)) == f.one());
}

TEST_CASE("field axioms on random scalars") {
    Field f = Field::default_field();
    testing::Rng rng;
    for (int t = 0; t < 200; ++t) {
        Scalar a = rng.scalar(f), b = rng.scalar(f);
        CHECK(a + f.zero() == a);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
}

TEST_CASE("inv(0) raises DivisionByZero") {
    Field f = Field::default_field();
    CHECK_THROWS_AS(f.zero().inv(), DivisionByZero);
}

TEST_CASE("degree-1 field behaves like plain rationals") {
    Field q = Field::rationals();
    CHECK(q.degree() == 1);
    Scalar a = q.rational(Rational(3, 4)), b = q.rational(Rational(-2, 5));
    CHECK((a * b).rational_part() == Rational(-3, 10));
    CHECK(a.conj() == a);
    CHECK(a.inv() * a == q.one());
}

TEST_CASE("field validation") {
    FieldSpec bad_monic;
    bad_monic.minimal_polynomial = {Rational(1), Rational(0), Rational(2)};
    CHECK_THROWS_AS(Field::make(bad_monic), ValidationError);

    FieldSpec has_root;  // x^2 - 1 = (x-1)(x+1)
    has_root.minimal_polynomial = {Rational(-1), Rational(0), Rational(1)};
    CHECK_THROWS_AS(Field::make(has_root), ValidationError);

    FieldSpec bad_conj;  // conj(z) = z^2 is not an involution mod x^4 - x^2 + 1
    bad_conj.minimal_polynomial = {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
    bad_conj.conjugation_image = {{Rational(0), Rational(0), Rational(1)}};
    CHECK_THROWS_AS(Field::make(bad_conj), ValidationError);

    FieldSpec ok;  // x^2 + 1, conj(z) = -z
    ok.minimal_polynomial = {Rational(1), Rational(0), Rational(1)};
    ok.conjugation_image = {{Rational(0), Rational(-1)}};
    Field gi = Field::make(ok);
    Scalar i = gi.generator();
    CHECK(i * i == gi.integer(-1));
    CHECK(i.conj() == -i);
}

TEST_CASE("scalar literal grammar and canonical serialization") {
    Field f = Field::default_field();
    CHECK(f.parse("2z - z^3") == f.sqrt3());
    CHECK(f.parse("1/2") == f.rational(Rational(1, 2)));
    CHECK(f.parse("(3/2)z^2") == f.rational(Rational(3, 2)) * f.generator().pow(2));
    CHECK(f.parse("-z") == -f.generator());
    CHECK(f.parse("z^6") == f.integer(-1));  // reduced mod m
    CHECK(f.parse("0") == f.zero());
    CHECK(f.zero().str() == "0");
    CHECK(f.sqrt3().str() == "2z - z^3");
    CHECK(f.rational(Rational(-1, 2)).str() == "-1/2");

    testing::Rng rng;
    for (int t = 0; t < 100; ++t) {
        Scalar s = rng.scalar(f);
        CHECK(f.parse(s.str()) == s);
    }
    CHECK_THROWS_AS(f.parse("z^"), ParseError);
    CHECK_THROWS_AS(f.parse(""), ParseError);
    CHECK_THROWS_AS(f.parse("q"), ParseError);
}
