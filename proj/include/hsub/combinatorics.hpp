#pragma once

#include <utility>
#include <vector>

#include "hsub/linalg.hpp"
#include "hsub/rational.hpp"

namespace hsub {

/// Memoized tables of Stirling numbers (both kinds) and of the coefficients
/// G_n^k for repeated integration with forward differences. Values outside
/// the triangles are 0 per the defining initial conditions. A table grows
/// monotonically and memoized entries always equal recomputation from the
/// recurrences. Instances are not synchronized; use one per thread.
class CoeffTable {
public:
    mpz_class stirling2(int n, int m);
    mpz_class stirling1_unsigned(int n, int m);
    /// Signed first kind, s(n,m) = (-1)^{n-m} [n,m].
    mpz_class stirling1_signed(int n, int m);

    /// G_n^k for k >= 1: G_0^k = 1/k!; the k = 1 row comes from the signed
    /// Stirling sum formula, rows k >= 2 from the Salzer recursion.
    Rational gregory(int n, int k);

private:
    void grow_stirling2(int n);
    void grow_stirling1(int n);
    void grow_gregory(int n, int k);
    std::vector<std::vector<mpz_class>> s2_, s1_;
    std::vector<std::vector<Rational>> g_;  // g_[k-1][n]
};

mpz_class stirling2(int n, int m);
mpz_class stirling1_unsigned(int n, int m);
mpz_class stirling1_signed(int n, int m);
Rational gregory_g(int n, int k);

/// p-Cauchy number C_{n,p} = n! (p+1)! G_n^{p+1}.
Rational p_cauchy(int n, int p);

/// gamma^j_m = m!/j! * {j over m}; 0 when m > j.
Rational gamma_coeff(int j, int m);

/// a_j = (1/(j+d)!, ..., 1/(j+1)!, 1/j!) and y_j = (G_j^d, ..., G_j^1, 0),
/// both of length d+1.
RatVec coeff_vector_a(int j, int d);
RatVec coeff_vector_y(int j, int d);
std::pair<RatVec, RatVec> coeff_vectors(int j, int d);

/// v with the last entry replaced by 0.
RatVec hat(RatVec v);

}  // namespace hsub
