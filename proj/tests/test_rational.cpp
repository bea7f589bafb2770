#include <doctest.h>

#include "angcm/rational.hpp"

using namespace angcm;

TEST_CASE("rationals reduce and keep the denominator positive") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7, 1).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational::parse("3/4") + Rational::parse("1/4") == Rational(1));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(Rational(5, 2).pow(2) == Rational(25, 4));
    CHECK(Rational(5, 2).pow(-1) == Rational(2, 5));
    CHECK(Rational(-8, 6).abs() == Rational(4, 3));
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("gaussian rationals form a field with conjugation involution") {
    GaussianRational a(Rational(1, 2), Rational(-3, 4));
    GaussianRational b(Rational(2), Rational(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b) * b.inverse() == a);
    CHECK((a + b) - b == a);
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(Rational(-1)));
    CHECK(a * a.conj() == GaussianRational(Rational(1, 4) + Rational(9, 16)));
}

TEST_CASE("gaussian rational text follows the coefficient grammar") {
    CHECK(GaussianRational(Rational(3, 2)).str() == "3/2");
    CHECK(GaussianRational(Rational(0), Rational(2)).str() == "0+2i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() == "1/2+-3/4i");
    CHECK(GaussianRational::parse("1/2+-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(GaussianRational::parse("-5") == GaussianRational(Rational(-5)));
    CHECK(GaussianRational::parse("0+2i") == GaussianRational(Rational(0), Rational(2)));
}
