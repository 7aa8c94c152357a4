#pragma once

#include <utility>
#include <vector>

#include "hsub/laurent_matrix.hpp"
#include "hsub/linalg.hpp"

namespace hsub {

/// Finitely supported sequence of (d+1)x(d+1) Rational matrices at
/// consecutive offsets; a subdivision operator S_A. The first and last
/// stored matrices are nonzero (support is trimmed on construction).
class Mask {
public:
    Mask(int d, int offset, std::vector<RatMat> matrices);

    int d() const { return d_; }
    int lo() const { return offset_; }
    int hi() const { return offset_ + static_cast<int>(mats_.size()) - 1; }
    bool is_zero() const { return mats_.empty(); }
    /// A(alpha); the zero matrix outside the support.
    RatMat at(int alpha) const;
    const std::vector<RatMat>& matrices() const { return mats_; }

    /// Symbol A#(z) = sum_alpha A(alpha) z^alpha.
    LaurentMatrix symbol() const;
    static Mask from_symbol(const LaurentMatrix& s);

    friend bool operator==(const Mask& a, const Mask& b) {
        return a.d_ == b.d_ && a.offset_ == b.offset_ && a.mats_ == b.mats_;
    }
    friend bool operator!=(const Mask& a, const Mask& b) { return !(a == b); }

private:
    int d_;
    int offset_;
    std::vector<RatMat> mats_;
};

/// Finitely supported sequence of (d+1) Rational vectors.
class VecSeq {
public:
    VecSeq(int d, int offset, std::vector<RatVec> vectors);
    static VecSeq zero(int d);
    /// Unit impulse: basis vector e_k at index alpha.
    static VecSeq impulse(int d, int alpha, int k);

    int d() const { return d_; }
    int lo() const { return offset_; }
    int hi() const { return offset_ + static_cast<int>(vecs_.size()) - 1; }
    bool is_zero() const { return vecs_.empty(); }
    RatVec at(int alpha) const;
    const std::vector<RatVec>& vectors() const { return vecs_; }

    /// Generating function c#(z) = sum_alpha c(alpha) z^alpha, as a column.
    LaurentMatrix symbol() const;

    /// Apply a constant matrix to every vector.
    VecSeq transformed(const RatMat& m) const;

    friend bool operator==(const VecSeq& a, const VecSeq& b) {
        return a.d_ == b.d_ && a.offset_ == b.offset_ && a.vecs_ == b.vecs_;
    }
    friend bool operator!=(const VecSeq& a, const VecSeq& b) { return !(a == b); }

private:
    int d_;
    int offset_;
    std::vector<RatVec> vecs_;
};

/// (S_A c)(alpha) = sum_beta A(alpha - 2 beta) c(beta), exact. The default
/// entry point parallelizes over output indices with OpenMP once the output
/// gets long; mask_apply_serial is the plain reference kept for testing.
VecSeq mask_apply(const Mask& A, const VecSeq& c);
VecSeq mask_apply_serial(const Mask& A, const VecSeq& c);

/// Coset sums (sum_b A(2b), sum_b A(2b+1)).
std::pair<RatMat, RatMat> coset_sums(const Mask& A);

/// Level-n mask of the Hermite scheme, Dil^{-level-1} A(.) Dil^{level}.
Mask hermite_level_mask(const Mask& A, int level);

/// Iterates c^{[n+1]} = S_{A^{[n]}} c^{[n]} for n = 0..levels-1 with the
/// level-dependent Hermite masks. Index alpha of the result refers to the
/// point alpha 2^{-levels}; entries read directly as function/derivative
/// samples. With scaled = true the result is multiplied by Dil^{levels},
/// which is the data produced by iterating the stationary operator S_A.
VecSeq hermite_iterate(const Mask& A, const VecSeq& c0, int levels, bool scaled = false);

}  // namespace hsub
