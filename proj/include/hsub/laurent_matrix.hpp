#pragma once

#include <string>
#include <vector>

#include "hsub/laurent.hpp"
#include "hsub/linalg.hpp"

namespace hsub {

/// Rectangular matrix with Laurent-polynomial entries; dimensions are fixed
/// at construction. Carrier of mask symbols A#(z) and operator symbols T*(z).
class LaurentMatrix {
public:
    LaurentMatrix() : rows_(0), cols_(0) {}
    LaurentMatrix(int rows, int cols);
    static LaurentMatrix identity(int n);
    /// Constant matrix embedded at z^0.
    static LaurentMatrix from_constant(const RatMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    /// Smallest/largest exponent over all entries; {0, 0} for the zero matrix.
    int min_exp() const;
    int max_exp() const;
    /// Coefficient matrix of z^e.
    RatMat coeff(int e) const;

    /// z -> z^2 in every entry.
    LaurentMatrix substitute_square() const;

    LaurentPoly det() const;       // square only
    LaurentMatrix adjugate() const;  // adj(M) with M * adj(M) = det(M) * I

    LaurentMatrix operator-() const;
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const Rational& s, const LaurentMatrix& a);
    friend LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<LaurentPoly> e_;
};

/// Exact right division: the X with X * den = num, computed as
/// num * adj(den) / det(den) with an explicit per-entry divisibility check.
/// Throws SingularMatrix when det(den) = 0 and NotExactlyDivisible when any
/// entry division leaves a remainder.
LaurentMatrix solve_right(const LaurentMatrix& num, const LaurentMatrix& den);

}  // namespace hsub
