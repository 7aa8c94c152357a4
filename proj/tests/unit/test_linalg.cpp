#include <doctest.h>

#include "../helpers.hpp"
#include "hsub/errors.hpp"
#include "hsub/linalg.hpp"

using namespace hsub;

namespace {

RatMat from_rows(std::vector<RatVec> rows) {
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("nullspace of identity and zero") {
    CHECK(rational_nullspace(RatMat::identity(3)).empty());
    auto basis = rational_nullspace(RatMat(2, 2));
    CHECK(basis.size() == 2);
}

TEST_CASE("nullspace of the constant-eigenvector system of the worked mask") {
    // rows (0,0),(0,0),(-2,0),(0,0): kernel is span{(0,1)}
    RatMat m = from_rows({{Rational(0), Rational(0)},
                          {Rational(0), Rational(0)},
                          {Rational(-2), Rational(0)},
                          {Rational(0), Rational(0)}});
    auto basis = rational_nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVec{Rational(0), Rational(1)});
}

TEST_CASE("nullspace vectors satisfy M v = 0 and complete the row space") {
    testing::Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        int rows = rng.integer(1, 5), cols = rng.integer(1, 5);
        RatMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(4, 3);
        auto basis = rational_nullspace(m);
        for (const auto& v : basis) {
            CHECK(is_zero_vec(m * v));
            // normalization: first nonzero entry is 1
            for (const auto& x : v)
                if (!x.is_zero()) {
                    CHECK(x == Rational(1));
                    break;
                }
        }
        // rank-nullity, and row space + kernel spans everything
        int r = rank(m);
        CHECK(r + static_cast<int>(basis.size()) == cols);
        RatMat stacked(rows + static_cast<int>(basis.size()), cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) stacked.at(i, j) = m.at(i, j);
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (int j = 0; j < cols; ++j) stacked.at(rows + static_cast<int>(b), j) = basis[b][static_cast<std::size_t>(j)];
        CHECK(rank(stacked) == cols);
    }
}

TEST_CASE("solve_linear particular solution and consistency report") {
    // x + y = 3, 2x + 2y = 6: consistent, one free variable set to 0
    RatMat m = from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
    auto sol = solve_linear(m, {Rational(3), Rational(6)});
    REQUIRE(sol.particular.has_value());
    CHECK((*sol.particular)[0] == Rational(3));
    CHECK((*sol.particular)[1] == Rational(0));
    CHECK(sol.kernel.size() == 1);

    auto bad = solve_linear(m, {Rational(3), Rational(7)});
    CHECK_FALSE(bad.particular.has_value());
    CHECK(bad.aug_rank == bad.rank + 1);
}

TEST_CASE("inverse") {
    testing::Rng rng(57);
    for (int it = 0; it < 20; ++it) {
        int n = rng.integer(1, 4);
        RatMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational();
        if (rank(m) < n) {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
            continue;
        }
        CHECK(m * inverse(m) == RatMat::identity(n));
    }
    CHECK_THROWS_AS(inverse(RatMat(2, 2)), SingularMatrix);
}

}
