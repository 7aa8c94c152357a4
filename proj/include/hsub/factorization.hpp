#pragma once

#include <vector>

#include "hsub/operators.hpp"
#include "hsub/spectral.hpp"
#include "hsub/subdivision.hpp"

namespace hsub {

/// One factor mask S_{B_j} together with the verification of the symbol
/// identity T*(z) A#(z) = 2^{-j} B#(z) T*(z^2) and the constant-eigenspace
/// reports for lambda = 1 and lambda = 2.
struct FactorizationResult {
    int order_j = 0;
    Mask input;
    DiffOp taylor_op;
    Mask factor;
    bool verified = false;
    std::vector<RatVec> eigenspace_1;  // basis of E_{B_j}
    std::vector<RatVec> eigenspace_2;  // basis of E_{2 B_j}
    /// Set when dim E_{2 B_j} != 1; the chain still proceeds (see the
    /// eigenspace discussion in the docs) but the result is marked.
    bool rank_one_flagged = false;
};

/// Solves T S_A = 2^{-j} S_B T for B by exact symbol division,
/// B#(z) = 2^j T*(z) A#(z) (T*(z^2))^{-1}. Throws NotExactlyDivisible when
/// the factorization does not exist and SingularMatrix when det T* = 0.
FactorizationResult factor_direct(const Mask& A, const DiffOp& T, int j);

/// One rank-one factorization step: with M = D V^{-1}, computes the mask C
/// with scale * M S_B = S_C M, i.e. C# = scale * M*(z) B#(z) (M*(z^2))^{-1}.
Mask rank1_step(const Mask& B, const RatMat& V, const Rational& scale);

/// Factor chain B_d, ..., B_n of the augmented Taylor factorization:
/// base step with T~_d, then repeated rank-one steps with the Gauss
/// generators I + y_{j+1-d} e_d^T. The y-vectors depend only on (d, j),
/// never on A. Requires A to satisfy the spectral condition of order n;
/// pass a previously solved system to gate on that representative, or leave
/// null to solve internally. Throws SpectralOrderInsufficient otherwise.
std::vector<FactorizationResult> factor_chain(const Mask& A, int n,
                                              const SpectralSystem* system = nullptr);

}  // namespace hsub
