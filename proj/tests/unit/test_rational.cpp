#include <doctest.h>

#include "hsub/errors.hpp"
#include "hsub/rational.hpp"

using namespace hsub;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(2, -4).denominator() == 2);  // denominator stays positive
}

TEST_CASE("text form round trip") {
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::parse("4/2").str() == "2");  // unreduced input canonicalized
    CHECK(Rational::parse("0").str() == "0");
    CHECK_THROWS_AS(Rational::parse(""), FormatError);
    CHECK_THROWS_AS(Rational::parse(" 1"), FormatError);
    CHECK_THROWS_AS(Rational::parse("1/"), FormatError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), FormatError);
    CHECK_THROWS_AS(Rational::parse("1/0"), FormatError);
    CHECK_THROWS_AS(Rational::parse("+1"), FormatError);
    CHECK_THROWS_AS(Rational::parse("1.5"), FormatError);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a < Rational(1, 2));
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("powers of two") {
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
}

}
