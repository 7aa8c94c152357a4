#include <doctest.h>

#include "hsub/combinatorics.hpp"
#include "hsub/poly.hpp"
#include "hsub/remainder.hpp"

using namespace hsub;

namespace {

// oracle: explicit binomial-sum formula for the second kind
mpz_class stirling2_explicit(int n, int m) {
    mpz_class sum = 0;
    for (int j = 0; j <= m; ++j) {
        mpz_class term = binomial(m, j);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
        term *= p;
        sum += ((m - j) % 2 == 0) ? term : mpz_class(-term);
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), factorial(m).get_mpz_t());
    return q;
}

// oracle: G_n^k from the signed-Stirling sum formula, independent of the
// recursion used by gregory_g for k >= 2
Rational gregory_stirling_formula(int n, int k) {
    if (n == 0) return Rational(mpz_class(1), factorial(k));
    Rational sum(0);
    for (int j = 1; j <= n; ++j) {
        mpz_class prod = 1;
        for (int t = 1; t <= k; ++t) prod *= (j + t);
        sum += Rational(stirling1_signed(n, j), prod);
    }
    return Rational(mpz_class(1), factorial(n)) * sum;
}

// oracle: exact symbolic iterated integration of the falling factorial
Rational gregory_integral_oracle(int n, int k) {
    Poly falling(Rational(1));
    for (int i = 0; i < n; ++i)
        falling = falling * Poly(std::vector<Rational>{Rational(-i), Rational(1)});
    return Rational(mpz_class(1), factorial(n)) * iterated_integral_exact(falling, k, Rational(0), Rational(1));
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("stirling second kind against the explicit formula") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(2, 5) == 0);
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= n; ++m) CHECK(stirling2(n, m) == stirling2_explicit(n, m));
}

TEST_CASE("stirling first kind, signed and unsigned") {
    for (int n = 0; n <= 10; ++n) CHECK(stirling1_signed(n, n) == 1);
    // recurrence unrolling: s(2,1) = -1, s(3,1) = 0 - 2*(-1) = 2
    CHECK(stirling1_signed(2, 1) == -1);
    CHECK(stirling1_signed(3, 1) == 2);
    CHECK(stirling1_signed(4, 2) == 11);
    // sign relation and the signed recurrence, both for n, m <= 12
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= 12; ++m) {
            mpz_class expect = stirling1_unsigned(n, m);
            if ((n - m) % 2 != 0) expect = -expect;
            CHECK(stirling1_signed(n, m) == expect);
            if (m >= 1 && n < 12)
                CHECK(stirling1_signed(n + 1, m) == stirling1_signed(n, m - 1) - n * stirling1_signed(n, m));
        }
}

TEST_CASE("binomial relation for the second kind") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            mpz_class sum = 0;
            for (int k = m; k <= n; ++k) sum += binomial(n, k) * stirling2(k, m);
            CHECK(stirling2(n + 1, m + 1) == sum);
        }
}

TEST_CASE("gregory values") {
    CHECK(gregory_g(0, 3) == Rational(1, 6));
    CHECK(gregory_g(2, 1) == Rational(-1, 12));
    CHECK(gregory_g(2, 2) == Rational(-1, 24));
    // first Gregory coefficients
    CHECK(gregory_g(0, 1) == Rational(1));
    CHECK(gregory_g(1, 1) == Rational(1, 2));
    CHECK(gregory_g(3, 1) == Rational(1, 24));
    CHECK(gregory_g(4, 1) == Rational(-19, 720));
    CHECK(gregory_g(5, 1) == Rational(3, 160));
}

TEST_CASE("gregory recursion agrees with the stirling-sum formula") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= 12; ++k) CHECK(gregory_g(n, k) == gregory_stirling_formula(n, k));
}

TEST_CASE("gregory agrees with exact symbolic integration") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(gregory_g(n, k) == gregory_integral_oracle(n, k));
}

TEST_CASE("stirling2-weighted sums of gregory values") {
    for (int j = 1; j <= 12; ++j)
        for (int k = 1; k <= 12; ++k) {
            Rational sum(0);
            for (int r = 1; r <= j; ++r) sum += Rational(stirling2(j, r) * factorial(r)) * gregory_g(r, k);
            mpz_class prod = 1;
            for (int t = 1; t <= k; ++t) prod *= (j + t);
            CHECK(sum == Rational(mpz_class(1), prod));
        }
}

TEST_CASE("p-cauchy numbers") {
    CHECK(p_cauchy(1, 0) == Rational(1, 2));
    CHECK(p_cauchy(2, 1) == Rational(-1, 6));
    for (int k = 0; k <= 8; ++k) CHECK(p_cauchy(0, k) == Rational(1));
}

TEST_CASE("gamma coefficients") {
    CHECK(gamma_coeff(1, 1) == Rational(1));
    CHECK(gamma_coeff(2, 1) == Rational(1, 2));
    CHECK(gamma_coeff(3, 2) == Rational(1));
    CHECK(gamma_coeff(2, 5) == Rational(0));
}

TEST_CASE("coefficient vectors") {
    auto [a0, y0] = coeff_vectors(0, 2);
    CHECK(a0 == RatVec{Rational(1, 2), Rational(1), Rational(1)});
    CHECK(y0 == RatVec{Rational(1, 2), Rational(1), Rational(0)});
    auto [a1, y1] = coeff_vectors(1, 2);
    CHECK(y1 == RatVec{Rational(1, 6), Rational(1, 2), Rational(0)});
    auto [a11, y11] = coeff_vectors(1, 1);
    CHECK(a11 == RatVec{Rational(1, 2), Rational(1)});
    CHECK(y11 == RatVec{Rational(1, 2), Rational(0)});
    (void)a1;
}

TEST_CASE("hat embedding identity: y_0 = a_0 with last entry zeroed") {
    for (int d = 1; d <= 4; ++d) CHECK(coeff_vector_y(0, d) == hat(coeff_vector_a(0, d)));
}

TEST_CASE("gamma-weighted sums of y vectors reproduce the a vectors") {
    for (int d = 1; d <= 4; ++d)
        for (int j = 1; j <= 10; ++j) {
            RatVec sum(static_cast<std::size_t>(d) + 1, Rational(0));
            for (int m = 1; m <= j; ++m) {
                Rational g = gamma_coeff(j, m);
                RatVec ym = coeff_vector_y(m, d);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g * ym[i];
            }
            CHECK(sum == hat(coeff_vector_a(j, d)));
        }
}

TEST_CASE("memoized tables equal fresh recomputation") {
    CoeffTable warm;
    (void)warm.gregory(10, 5);
    (void)warm.stirling2(12, 6);
    CoeffTable cold;
    CHECK(warm.gregory(7, 3) == cold.gregory(7, 3));
    CHECK(warm.stirling2(9, 4) == cold.stirling2(9, 4));
    CHECK(warm.stirling1_signed(9, 4) == cold.stirling1_signed(9, 4));
}

}
