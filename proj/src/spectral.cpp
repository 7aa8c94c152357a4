#include "hsub/spectral.hpp"

#include <random>
#include <stdexcept>

#include "hsub/errors.hpp"
#include "hsub/rational.hpp"

namespace hsub {

SpectralSystem monomial_system(int d, int order) {
    SpectralSystem sys{d, order, {}};
    for (int k = 0; k <= order; ++k) sys.polys.push_back(Poly::monomial(k, Rational(mpz_class(1), factorial(k))));
    return sys;
}

bool SpectralCheckReport::all_ok() const {
    for (bool b : ok)
        if (!b) return false;
    return true;
}

namespace {

// residual of the two parity identities for a candidate polynomial p at
// order k; linear in p, identically zero iff S_A v(p) = 2^{-k} v(p)
std::pair<PolyVec, PolyVec> spectral_residual(const Mask& A, const Poly& p, int k) {
    PolyVec s = vpoly(p, A.d());
    auto [even, odd] = mask_apply_poly(A, s);
    Rational scale = Rational::pow2(-k);
    PolyVec even_target = scale * s.scale_arg(Rational(2));
    PolyVec odd_target = scale * s.shift(Rational(1)).scale_arg(Rational(2));
    return {even - even_target, odd - odd_target};
}

void append_coeffs(RatVec& out, const PolyVec& v, int max_deg) {
    for (int i = 0; i <= v.d(); ++i)
        for (int t = 0; t <= max_deg; ++t) out.push_back(v.entry(i).coeff(t));
}

RatVec residual_vector(const Mask& A, const Poly& p, int k) {
    auto [re, ro] = spectral_residual(A, p, k);
    RatVec out;
    out.reserve(2 * static_cast<std::size_t>(A.d() + 1) * static_cast<std::size_t>(k + 2));
    int max_deg = std::max(k, std::max(p.degree(), 0)) + 1;  // generous padding
    append_coeffs(out, re, max_deg);
    append_coeffs(out, ro, max_deg);
    return out;
}

}  // namespace

SpectralCheckReport spectral_check(const Mask& A, const SpectralSystem& sys) {
    if (A.d() != sys.d) throw DimensionMismatch("spectral_check: d mismatch");
    SpectralCheckReport report;
    for (int k = 0; k <= sys.order && k < static_cast<int>(sys.polys.size()); ++k) {
        auto [re, ro] = spectral_residual(A, sys.polys[static_cast<std::size_t>(k)], k);
        report.ok.push_back(re.is_zero() && ro.is_zero());
    }
    return report;
}

SpectralSolveResult spectral_solve(const Mask& A, int max_order, std::optional<unsigned> randomize_seed) {
    if (max_order < 0) throw std::invalid_argument("spectral_solve: negative order");
    std::mt19937 rng(randomize_seed.value_or(0));
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);

    SpectralSystem sys{A.d(), max_order, {}};
    for (int k = 0; k <= max_order; ++k) {
        Poly lead = Poly::monomial(k, Rational(mpz_class(1), factorial(k)));
        RatVec b = residual_vector(A, lead, k);
        RatMat m(static_cast<int>(b.size()), k);
        for (int i = 0; i < k; ++i) {
            RatVec col = residual_vector(A, Poly::monomial(i), k);
            for (std::size_t r = 0; r < col.size(); ++r) m.at(static_cast<int>(r), i) = col[r];
        }
        RatVec neg_b = b;
        for (auto& x : neg_b) x = -x;
        LinearSolution sol = solve_linear(m, neg_b);
        if (!sol.particular) return {std::nullopt, k};
        RatVec c = *sol.particular;
        if (randomize_seed)
            for (const auto& kvec : sol.kernel) {
                Rational r(num(rng), den(rng));
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += r * kvec[i];
            }
        Poly p = lead;
        for (int i = 0; i < k; ++i) p += Poly::monomial(i, c[static_cast<std::size_t>(i)]);
        sys.polys.push_back(p);
    }
    return {sys, -1};
}

std::vector<RatVec> eigenspace_constants(const Mask& A, const Rational& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("eigenspace_constants: lambda must be nonzero");
    auto [even, odd] = coset_sums(A);
    int n = A.d() + 1;
    RatMat sys(2 * n, n);
    RatMat id = RatMat::identity(n);
    RatMat top = lambda * even - id;
    RatMat bot = lambda * odd - id;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sys.at(i, j) = top.at(i, j);
            sys.at(n + i, j) = bot.at(i, j);
        }
    return rational_nullspace(sys);
}

Mask mask_construct(int d, int n, int support_lo, int support_hi) {
    if (d < 1) throw std::invalid_argument("mask_construct: d must be >= 1");
    if (n < d) throw std::invalid_argument("mask_construct: order must be >= d");
    if (support_lo > support_hi) throw std::invalid_argument("mask_construct: empty support");

    const int width = support_hi - support_lo + 1;
    const int dim = d + 1;
    const int ncols = width * dim * dim;
    auto var = [&](int alpha, int i, int j) { return ((alpha - support_lo) * dim + i) * dim + j; };

    // rows: for k, parity r, output row i, coefficient power t = 0..k
    int nrows = 0;
    for (int k = 0; k <= n; ++k) nrows += 2 * dim * (k + 1);
    RatMat m(nrows, ncols);
    RatVec b(static_cast<std::size_t>(nrows), Rational(0));

    int row = 0;
    for (int k = 0; k <= n; ++k) {
        Poly p = Poly::monomial(k, Rational(mpz_class(1), factorial(k)));
        std::vector<Poly> derivs;
        for (int j = 0; j <= d; ++j) derivs.push_back(p.derivative(j));
        for (int r = 0; r < 2; ++r) {
            for (int i = 0; i <= d; ++i) {
                // rhs: 2^{-k} p^{(i)}(2x + r)
                Poly rhs = Rational::pow2(-k) * derivs[static_cast<std::size_t>(i)]
                               .shift(Rational(r))
                               .scale_arg(Rational(2));
                for (int t = 0; t <= k; ++t) {
                    b[static_cast<std::size_t>(row + t)] = rhs.coeff(t);
                }
                for (int alpha = support_lo; alpha <= support_hi; ++alpha) {
                    // alpha = 2 gamma + r contributes A(alpha) s(. - gamma)
                    int rem = alpha - r;
                    if (rem % 2 != 0) continue;
                    int gamma = rem / 2;
                    for (int j = 0; j <= d; ++j) {
                        Poly sj = derivs[static_cast<std::size_t>(j)].shift(Rational(-gamma));
                        for (int t = 0; t <= k; ++t) {
                            Rational c = sj.coeff(t);
                            if (!c.is_zero()) m.at(row + t, var(alpha, i, j)) = c;
                        }
                    }
                }
                row += k + 1;
            }
        }
    }

    LinearSolution sol = solve_linear(m, b);
    if (!sol.particular)
        throw InfeasibleConstruction("mask_construct: support {" + std::to_string(support_lo) + ".." +
                                         std::to_string(support_hi) + "} admits no mask of order " +
                                         std::to_string(n) + " (rank " + std::to_string(sol.rank) +
                                         ", augmented rank " + std::to_string(sol.aug_rank) + ")",
                                     sol.rank, sol.aug_rank);
    const RatVec& x = *sol.particular;
    std::vector<RatMat> mats;
    mats.reserve(static_cast<std::size_t>(width));
    for (int alpha = support_lo; alpha <= support_hi; ++alpha) {
        RatMat mat(dim, dim);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) mat.at(i, j) = x[static_cast<std::size_t>(var(alpha, i, j))];
        mats.push_back(std::move(mat));
    }
    return Mask(d, support_lo, std::move(mats));
}

}  // namespace hsub
