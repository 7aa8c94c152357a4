#include "hsub/factorization.hpp"

#include <stdexcept>

#include "hsub/combinatorics.hpp"
#include "hsub/errors.hpp"

namespace hsub {

namespace {

bool verify_identity(const Mask& A, const Mask& B, const DiffOp& T, int j) {
    LaurentMatrix lhs = T.symbol() * A.symbol();
    LaurentMatrix rhs = Rational::pow2(-j) * (B.symbol() * T.symbol().substitute_square());
    return lhs == rhs;
}

FactorizationResult make_result(const Mask& A, const DiffOp& T, int j, Mask B) {
    FactorizationResult res{j, A, T, std::move(B)};
    res.verified = verify_identity(A, res.factor, T, j);
    res.eigenspace_1 = eigenspace_constants(res.factor, Rational(1));
    res.eigenspace_2 = eigenspace_constants(res.factor, Rational(2));
    res.rank_one_flagged = res.eigenspace_2.size() != 1;
    return res;
}

}  // namespace

FactorizationResult factor_direct(const Mask& A, const DiffOp& T, int j) {
    if (T.dim() != A.d() + 1) throw DimensionMismatch("factor_direct: operator/mask dimension mismatch");
    if (j < 0) throw std::invalid_argument("factor_direct: negative order");
    LaurentMatrix num = Rational::pow2(j) * (T.symbol() * A.symbol());
    LaurentMatrix den = T.symbol().substitute_square();
    LaurentMatrix bsym = solve_right(num, den);
    return make_result(A, T, j, Mask::from_symbol(bsym));
}

Mask rank1_step(const Mask& B, const RatMat& V, const Rational& scale) {
    if (V.rows() != B.d() + 1 || V.cols() != B.d() + 1)
        throw DimensionMismatch("rank1_step: generator dimension mismatch");
    RatMat vinv = inverse(V);  // throws SingularMatrix
    LaurentMatrix msym = delta_block(B.d()).symbol() * LaurentMatrix::from_constant(vinv);
    LaurentMatrix num = scale * (msym * B.symbol());
    LaurentMatrix csym = solve_right(num, msym.substitute_square());
    return Mask::from_symbol(csym);
}

std::vector<FactorizationResult> factor_chain(const Mask& A, int n, const SpectralSystem* system) {
    const int d = A.d();
    if (n < d) throw std::invalid_argument("factor_chain: order must be >= d");
    if (system) {
        if (system->order < n || !spectral_check(A, *system).all_ok())
            throw SpectralOrderInsufficient("factor_chain: supplied spectral system does not certify order " +
                                                std::to_string(n),
                                            n);
    } else {
        SpectralSolveResult solved = spectral_solve(A, n);
        if (!solved.ok())
            throw SpectralOrderInsufficient(
                "factor_chain: mask fails the spectral condition at order " + std::to_string(solved.failed_order),
                solved.failed_order);
    }

    std::vector<FactorizationResult> chain;
    chain.push_back(factor_direct(A, augmented_taylor(d, d), d));
    for (int j = d + 1; j <= n; ++j) {
        const Mask& prev = chain.back().factor;
        RatVec y = coeff_vector_y(j - d, d);
        // the proof's fixed point: 2 S_{B_{j-1}} (e_d + y) = e_d + y on both cosets
        RatVec w = y;
        w.back() = Rational(1);
        auto [even, odd] = coset_sums(prev);
        RatVec we = even * w, wo = odd * w;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (Rational(2) * we[i] != w[i] || Rational(2) * wo[i] != w[i])
                throw NotExactlyDivisible("factor_chain: e_d + y_" + std::to_string(j - d) +
                                          " is not fixed by 2 S_B at step " + std::to_string(j));
        Mask next = rank1_step(prev, gauss_matrix(y), Rational(2));
        chain.push_back(make_result(A, augmented_taylor(d, j), j, std::move(next)));
    }
    return chain;
}

}  // namespace hsub
