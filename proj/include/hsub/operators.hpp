#pragma once

#include <map>

#include "hsub/laurent_matrix.hpp"
#include "hsub/linalg.hpp"

namespace hsub {

/// Stationary difference operator with matrix coefficients, stored by its
/// symbol. Convention, fixed once for the whole library: an operator acting
/// as (Lc)(a) = sum_b L(b) c(a+b) has symbol L*(z) = sum_b L(b) z^{-b}, so
/// that (Lc)#(z) = L*(z) c#(z) with c#(z) = sum_a c(a) z^a and composition
/// of operators is multiplication of symbols.
class DiffOp {
public:
    explicit DiffOp(LaurentMatrix symbol);

    int dim() const { return symbol_.rows(); }  // d + 1
    const LaurentMatrix& symbol() const { return symbol_; }

    /// Coefficient view: offset b -> L(b), nonzero matrices only.
    std::map<int, RatMat> coefficients() const;

    /// Composition (this after o), i.e. symbol product.
    DiffOp operator*(const DiffOp& o) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.symbol_ == b.symbol_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
    LaurentMatrix symbol_;
};

/// Symbol of the forward difference, z^{-1} - 1.
LaurentPoly delta_symbol(int power = 1);

/// Block operator diag(1, ..., 1, Delta) of size d+1.
DiffOp delta_block(int d);

enum class TaylorVariant { incomplete, complete, prime };

/// Taylor operators of size d+1. Superdiagonal band entries are -1/(j-i)!,
/// the diagonal carries Delta, and the variant selects the last row/column:
/// incomplete has corner 1, complete has corner Delta, prime zeroes the last
/// column and has corner 1. d = 0 is allowed with the conventions
/// T~_0 = Delta and T_0 = T_0' = id.
DiffOp taylor(int d, TaylorVariant variant);

/// Augmented Taylor operator T~_d^n of order n >= d >= 1: upper-left block
/// T~_{d-1}, last column -sum_{k=0}^{n-d} G_k^{d:1} Delta^k, corner
/// Delta^{n+1-d}.
DiffOp augmented_taylor(int d, int n);

/// The operator D (I_{d+1} - y e_d^T) for y with last entry 0: identity
/// block, last column -y_{0:d-1}, corner Delta.
DiffOp gauss_step(const RatVec& y);

/// Gauss matrix I_{d+1} + y e_d^T and its inverse I_{d+1} - y e_d^T
/// (y_d must be 0).
RatMat gauss_matrix(const RatVec& y);
RatMat gauss_matrix_inverse(const RatVec& y);

/// The constant matrix diag(1, 2^{-1}, ..., 2^{-d}) of the Hermite mask
/// sandwich. Named to avoid the clash with the block difference operator.
class DilationMatrix {
public:
    explicit DilationMatrix(int d);
    int d() const { return d_; }
    /// Entry (k,k) of the e-th power, 2^{-k e}; e may be negative.
    Rational entry(int k, int e = 1) const;
    RatMat pow(int e) const;

private:
    int d_;
};

}  // namespace hsub
