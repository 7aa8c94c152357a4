#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsub/rational.hpp"

namespace hsub {

using RatVec = std::vector<Rational>;

/// Dense matrix of Rationals, row-major. Dimensions fixed at construction.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols, const Rational& fill = Rational(0));
    static RatMat identity(int n);
    static RatMat diagonal(const RatVec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    RatMat transpose() const;

    RatMat operator-() const;
    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatVec operator*(const RatMat& a, const RatVec& v);
    friend RatMat operator*(const Rational& s, const RatMat& a);
    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Exact basis of { v : M v = 0 } via fraction-free (Bareiss) elimination on
/// the denominator-cleared integer matrix. Basis vectors are normalized so
/// their first nonzero entry is 1; empty result means trivial kernel.
std::vector<RatVec> rational_nullspace(const RatMat& m);

/// Outcome of exact Gauss-Jordan on [M | b].
struct LinearSolution {
    std::optional<RatVec> particular;  // free variables set to 0
    std::vector<RatVec> kernel;        // basis of the homogeneous solutions
    int rank = 0;
    int aug_rank = 0;  // rank of [M | b]; > rank means inconsistent
};

LinearSolution solve_linear(const RatMat& m, const RatVec& b);

/// Exact inverse; throws SingularMatrix.
RatMat inverse(const RatMat& m);

int rank(const RatMat& m);

}  // namespace hsub
