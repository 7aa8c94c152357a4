#include <doctest.h>

#include "../helpers.hpp"
#include "hsub/poly.hpp"

using namespace hsub;

namespace {

Poly x_pow(int n, const Rational& c = Rational(1)) { return Poly::monomial(n, c); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("zero polynomial marker") {
    Poly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Poly(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
    CHECK(x_pow(2).degree() == 2);
}

TEST_CASE("shift identity and unit cases") {
    Poly p = x_pow(2);
    CHECK(p.shift(Rational(0)) == p);
    // (x+1)^2 = x^2 + 2x + 1
    CHECK(p.shift(Rational(1)) == Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("shift of x^3/6 by -1, frozen from brute-force expansion") {
    // (x-1)^3/6 expanded by multiplying (x-1)(x-1)(x-1)/6 directly
    Poly lin(std::vector<Rational>{Rational(-1), Rational(1)});
    Poly brute = Rational(1, 6) * (lin * lin * lin);
    Poly p = x_pow(3, Rational(1, 6));
    Poly shifted = p.shift(Rational(-1));
    CHECK(shifted == brute);
    CHECK(shifted ==
          Poly(std::vector<Rational>{Rational(-1, 6), Rational(1, 2), Rational(-1, 2), Rational(1, 6)}));
}

TEST_CASE("shift composition property") {
    testing::Rng rng(101);
    for (int it = 0; it < 40; ++it) {
        Poly p = rng.poly(rng.integer(0, 6));
        Rational s = rng.rational(), t = rng.rational();
        CHECK(p.shift(s).shift(t) == p.shift(s + t));
    }
}

TEST_CASE("derivative and antiderivative") {
    Poly p = x_pow(3, Rational(1, 6));
    CHECK(p.derivative() == x_pow(2, Rational(1, 2)));
    CHECK(p.derivative(3) == Poly(Rational(1)));
    CHECK(p.derivative(4).is_zero());
    CHECK(p.antiderivative().derivative() == p);
}

TEST_CASE("evaluation") {
    Poly p(std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});  // (x-1)^2
    CHECK(p.eval(Rational(1)).is_zero());
    CHECK(p.eval(Rational(3, 2)) == Rational(1, 4));
    CHECK(p.eval_double(3.0) == doctest::Approx(4.0));
}

TEST_CASE("argument scaling") {
    Poly p = x_pow(2, Rational(1, 2));
    CHECK(p.scale_arg(Rational(2)) == x_pow(2, Rational(2)));
    CHECK(p.shift(Rational(1)).scale_arg(Rational(2)).eval(Rational(1)) == p.eval(Rational(3)));
}

TEST_CASE("forward differences kill degree") {
    Poly p = x_pow(3);
    CHECK(forward_difference(p, 4).is_zero());
    CHECK(forward_difference(p, 3) == Poly(Rational(6)));
}

}
