#pragma once

#include <optional>
#include <vector>

#include "hsub/poly.hpp"
#include "hsub/polyseq.hpp"
#include "hsub/subdivision.hpp"

namespace hsub {

/// Spectral polynomials p_0..p_order with deg(p_k) = k and leading
/// coefficient 1/k!.
struct SpectralSystem {
    int d = 1;
    int order = 0;
    std::vector<Poly> polys;
};

/// Canonical system with monomials p_k = x^k / k!.
SpectralSystem monomial_system(int d, int order);

struct SpectralCheckReport {
    std::vector<bool> ok;  // per k
    bool all_ok() const;
};

/// Checks S_A v(p_k) = 2^{-k} v(p_k) for every k as an exact polynomial
/// identity on both parities.
SpectralCheckReport spectral_check(const Mask& A, const SpectralSystem& sys);

struct SpectralSolveResult {
    std::optional<SpectralSystem> system;
    int failed_order = -1;  // first infeasible k when !system
    bool ok() const { return system.has_value(); }
};

/// Solves for spectral polynomials order by order: p_k = x^k/k! plus unknown
/// lower-order terms, imposing both parity identities as exact linear
/// equations. Free parameters are set to 0 (canonical representative); with
/// a seed they are set to small random rationals instead, producing a second
/// admissible representative for independence tests.
SpectralSolveResult spectral_solve(const Mask& A, int max_order,
                                   std::optional<unsigned> randomize_seed = std::nullopt);

/// Exact basis of E_{lambda A} = { c : lambda (S_A c) = c, c constant }, via
/// the nullspace of the stacked coset system. lambda must be nonzero.
std::vector<RatVec> eigenspace_constants(const Mask& A, const Rational& lambda);

/// Solves the linear constraints S_A v(x^k/k!) = 2^{-k} v(x^k/k!), k = 0..n,
/// for the mask entries on the given support; remaining free entries are 0.
/// Throws InfeasibleConstruction when the support admits no solution.
Mask mask_construct(int d, int n, int support_lo, int support_hi);

}  // namespace hsub
