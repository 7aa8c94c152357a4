#pragma once

#include <random>
#include <vector>

#include "hsub/linalg.hpp"
#include "hsub/poly.hpp"
#include "hsub/subdivision.hpp"

namespace hsub::testing {

/// The worked order-1 mask W (d = 1, support {0, 1}):
/// A(0) = [[1, 0], [0, 1/2]], A(1) = [[1, 1/2], [0, 1/2]].
inline Mask worked_mask() {
    RatMat a0(2, 2), a1(2, 2);
    a0.at(0, 0) = Rational(1);
    a0.at(1, 1) = Rational(1, 2);
    a1.at(0, 0) = Rational(1);
    a1.at(0, 1) = Rational(1, 2);
    a1.at(1, 1) = Rational(1, 2);
    return Mask(1, 0, {a0, a1});
}

struct Rng {
    explicit Rng(unsigned seed) : gen(seed) {}
    Rational rational(int max_num = 6, int max_den = 4) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(gen), den(gen));
    }
    Rational nonzero_rational(int max_num = 6, int max_den = 4) {
        Rational r;
        do {
            r = rational(max_num, max_den);
        } while (r.is_zero());
        return r;
    }
    /// Random polynomial of exact degree n.
    Poly poly(int n) {
        std::vector<Rational> c;
        for (int i = 0; i < n; ++i) c.push_back(rational());
        c.push_back(nonzero_rational());
        return Poly(std::move(c));
    }
    /// Random degree-n polynomial normalized as x^n/n! + lower-order terms.
    Poly normalized_poly(int n) {
        std::vector<Rational> c;
        for (int i = 0; i < n; ++i) c.push_back(rational());
        c.push_back(Rational(mpz_class(1), factorial(n)));
        return Poly(std::move(c));
    }
    RatVec vec(int len) {
        RatVec v;
        for (int i = 0; i < len; ++i) v.push_back(rational());
        return v;
    }
    /// Random vector with last entry zero (a gauss_step coefficient).
    RatVec hat_vec(int len) {
        RatVec v = vec(len - 1);
        v.push_back(Rational(0));
        return v;
    }
    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(gen);
    }
    std::mt19937 gen;
};

}  // namespace hsub::testing
