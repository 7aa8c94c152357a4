#include "hsub/laurent_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hsub/errors.hpp"

namespace hsub {

LaurentMatrix::LaurentMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("LaurentMatrix: dimensions must be positive");
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Rational(1));
    return m;
}

LaurentMatrix LaurentMatrix::from_constant(const RatMat& c) {
    LaurentMatrix m(c.rows(), c.cols());
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) m.at(i, j) = LaurentPoly(c.at(i, j));
    return m;
}

bool LaurentMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

int LaurentMatrix::min_exp() const {
    int mn = 0;
    bool any = false;
    for (const auto& p : e_)
        if (!p.is_zero()) {
            mn = any ? std::min(mn, p.min_exp()) : p.min_exp();
            any = true;
        }
    return mn;
}

int LaurentMatrix::max_exp() const {
    int mx = 0;
    bool any = false;
    for (const auto& p : e_)
        if (!p.is_zero()) {
            mx = any ? std::max(mx, p.max_exp()) : p.max_exp();
            any = true;
        }
    return mx;
}

RatMat LaurentMatrix::coeff(int e) const {
    RatMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff(e);
    return m;
}

LaurentMatrix LaurentMatrix::substitute_square() const {
    LaurentMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].substitute_square();
    return m;
}

LaurentMatrix LaurentMatrix::operator-() const {
    LaurentMatrix m = *this;
    for (auto& p : m.e_) p = -p;
    return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("LaurentMatrix +: shape mismatch");
    LaurentMatrix m = a;
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
    return m;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) { return a + (-b); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("LaurentMatrix *: inner dimensions differ");
    LaurentMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

LaurentMatrix operator*(const Rational& s, const LaurentMatrix& a) {
    LaurentMatrix m = a;
    for (auto& p : m.e_) p = s * p;
    return m;
}

LaurentMatrix operator*(const LaurentPoly& s, const LaurentMatrix& a) {
    LaurentMatrix m = a;
    for (auto& p : m.e_) p = s * p;
    return m;
}

namespace {

LaurentPoly det_recursive(const LaurentMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    LaurentPoly d;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        LaurentMatrix minor(n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        LaurentPoly term = m.at(i, 0) * det_recursive(minor);
        if (i % 2 == 0)
            d += term;
        else
            d -= term;
    }
    return d;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("det: matrix not square");
    return det_recursive(*this);
}

LaurentMatrix LaurentMatrix::adjugate() const {
    if (rows_ != cols_) throw DimensionMismatch("adjugate: matrix not square");
    const int n = rows_;
    if (n == 1) return LaurentMatrix::identity(1);
    LaurentMatrix adj(n, n);
    LaurentMatrix minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = at(r, c);
                    ++mc;
                }
                ++mr;
            }
            LaurentPoly cof = det_recursive(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transposed cofactor
        }
    return adj;
}

std::string LaurentMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        if (i + 1 != rows_) os << "\n";
    }
    return os.str();
}

LaurentMatrix solve_right(const LaurentMatrix& num, const LaurentMatrix& den) {
    if (den.rows() != den.cols()) throw DimensionMismatch("solve_right: denominator not square");
    if (num.cols() != den.rows()) throw DimensionMismatch("solve_right: shape mismatch");
    LaurentPoly d = den.det();
    if (d.is_zero()) throw SingularMatrix("solve_right: denominator has zero determinant");
    LaurentMatrix x = num * den.adjugate();
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            auto q = x.at(i, j).divide_exact(d);
            if (!q)
                throw NotExactlyDivisible("solve_right: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") is not divisible by det");
            x.at(i, j) = std::move(*q);
        }
    return x;
}

}  // namespace hsub
