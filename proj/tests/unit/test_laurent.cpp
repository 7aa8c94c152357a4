#include <doctest.h>

#include "../helpers.hpp"
#include "hsub/errors.hpp"
#include "hsub/laurent.hpp"
#include "hsub/laurent_matrix.hpp"

using namespace hsub;

namespace {

LaurentPoly zpow(int e, const Rational& c = Rational(1)) { return LaurentPoly::monomial(e, c); }

// 1x1 and 2x2 fixtures from the worked order-1 computation
LaurentMatrix lhs_2x2() {
    // [[z^-1 - 1, -1], [0, 1]]
    LaurentMatrix m(2, 2);
    m.at(0, 0) = zpow(-1) - zpow(0);
    m.at(0, 1) = -zpow(0);
    m.at(1, 1) = zpow(0);
    return m;
}

LaurentMatrix rhs_2x2() {
    // [[1 + z, z/2], [0, (1 + z)/2]]
    LaurentMatrix m(2, 2);
    m.at(0, 0) = zpow(0) + zpow(1);
    m.at(0, 1) = zpow(1, Rational(1, 2));
    m.at(1, 1) = Rational(1, 2) * (zpow(0) + zpow(1));
    return m;
}

LaurentMatrix random_matrix(testing::Rng& rng, int n, int band = 2) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> c;
            for (int e = -band; e <= band; ++e) c.push_back(rng.rational(3, 2));
            m.at(i, j) = LaurentPoly(-band, std::move(c));
        }
    return m;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("normalization trims zero edges") {
    LaurentPoly p(-2, {Rational(0), Rational(1), Rational(0)});
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == -1);
    CHECK(p == zpow(-1));
    CHECK(LaurentPoly(5, {Rational(0)}).is_zero());
}

TEST_CASE("arithmetic") {
    LaurentPoly d = zpow(-1) - zpow(0);  // z^-1 - 1
    CHECK(d * d == zpow(-2) - Rational(2) * zpow(-1) + zpow(0));
    CHECK((d - d).is_zero());
    CHECK(d.coeff(-1) == Rational(1));
    CHECK(d.coeff(0) == Rational(-1));
    CHECK(d.coeff(3).is_zero());
}

TEST_CASE("substitute square is monomial-wise") {
    CHECK(zpow(1).substitute_square() == zpow(2));
    CHECK((zpow(-1) - zpow(0)).substitute_square() == zpow(-2) - zpow(0));
    LaurentPoly p = zpow(0) + zpow(1) + zpow(2);
    CHECK(p.substitute_square() == zpow(0) + zpow(2) + zpow(4));
}

TEST_CASE("exact division") {
    LaurentPoly d = zpow(-1) - zpow(0);
    LaurentPoly num = d * (zpow(3, Rational(2, 3)) + zpow(-2, Rational(5)));
    auto q = num.divide_exact(d);
    REQUIRE(q.has_value());
    CHECK(*q == zpow(3, Rational(2, 3)) + zpow(-2, Rational(5)));
    CHECK_FALSE(zpow(0).divide_exact(d).has_value());  // 1 is not a multiple of z^-1 - 1
    CHECK_THROWS(num.divide_exact(LaurentPoly()));
}

TEST_CASE("delta expansion") {
    // z^-1 - 1 = delta
    CHECK((zpow(-1) - zpow(0)).delta_expansion() == Poly::monomial(1));
    // z^-2 = (1 + delta)^2
    CHECK(zpow(-2).delta_expansion() ==
          Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(1)}));
    CHECK_THROWS(zpow(1).delta_expansion());
}

TEST_CASE("matrix identities") {
    LaurentMatrix id = LaurentMatrix::identity(2);
    LaurentMatrix m = rhs_2x2();
    CHECK(id * m == m);
    LaurentMatrix dz(2, 2), dzi(2, 2);
    dz.at(0, 0) = zpow(1);
    dz.at(1, 1) = zpow(1);
    dzi.at(0, 0) = zpow(-1);
    dzi.at(1, 1) = zpow(-1);
    CHECK(dz * dzi == id);
}

TEST_CASE("matrix product, frozen from entrywise expansion") {
    // [[z^-1 - 1, -1],[0, 1]] x [[1+z, z/2],[0,(1+z)/2]] = [[z^-1 - z, -z],[0,(1+z)/2]]
    LaurentMatrix prod = lhs_2x2() * rhs_2x2();
    LaurentMatrix expect(2, 2);
    expect.at(0, 0) = zpow(-1) - zpow(1);
    expect.at(0, 1) = -zpow(1);
    expect.at(1, 1) = Rational(1, 2) * (zpow(0) + zpow(1));
    CHECK(prod == expect);
    CHECK_THROWS_AS(prod * LaurentMatrix(3, 3), DimensionMismatch);
}

TEST_CASE("solve_right on the worked complete-Taylor division") {
    // num = [[z^-1 - z, -z],[0,(z^-1 - z)/2]], den = [[z^-2 - 1, -1],[0, z^-2 - 1]]
    LaurentMatrix num(2, 2), den(2, 2);
    num.at(0, 0) = zpow(-1) - zpow(1);
    num.at(0, 1) = -zpow(1);
    num.at(1, 1) = Rational(1, 2) * (zpow(-1) - zpow(1));
    den.at(0, 0) = zpow(-2) - zpow(0);
    den.at(0, 1) = -zpow(0);
    den.at(1, 1) = zpow(-2) - zpow(0);
    LaurentMatrix x = solve_right(num, den);
    LaurentMatrix expect(2, 2);
    expect.at(0, 0) = zpow(1);
    expect.at(1, 1) = zpow(1, Rational(1, 2));
    CHECK(x == expect);
    CHECK(x * den == num);  // oracle: verify by re-multiplication
}

TEST_CASE("solve_right trivial and error cases") {
    LaurentMatrix den = rhs_2x2();
    CHECK(solve_right(den, den) == LaurentMatrix::identity(2));
    LaurentMatrix num(1, 1), d1(1, 1);
    num.at(0, 0) = zpow(0);
    d1.at(0, 0) = zpow(-1) - zpow(0);
    CHECK_THROWS_AS(solve_right(num, d1), NotExactlyDivisible);
    LaurentMatrix sing(2, 2);
    sing.at(0, 0) = zpow(0);  // second row zero, det = 0
    CHECK_THROWS_AS(solve_right(rhs_2x2(), sing), SingularMatrix);
}

TEST_CASE("solve_right round trip on random matrices") {
    testing::Rng rng(2024);
    int done = 0;
    while (done < 20) {
        int n = rng.integer(1, 3);
        LaurentMatrix x = random_matrix(rng, n, 1);
        LaurentMatrix den = random_matrix(rng, n, 1);
        if (den.det().is_zero()) continue;
        CHECK(solve_right(x * den, den) == x);
        ++done;
    }
}

TEST_CASE("adjugate identity") {
    testing::Rng rng(77);
    for (int it = 0; it < 10; ++it) {
        int n = rng.integer(1, 3);
        LaurentMatrix m = random_matrix(rng, n, 1);
        LaurentPoly d = m.det();
        LaurentMatrix prod = m * m.adjugate();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(prod.at(i, j) == (i == j ? d : LaurentPoly()));
    }
}

}
