#include "hsub/operators.hpp"

#include <stdexcept>

#include "hsub/combinatorics.hpp"
#include "hsub/errors.hpp"

namespace hsub {

DiffOp::DiffOp(LaurentMatrix symbol) : symbol_(std::move(symbol)) {
    if (symbol_.rows() != symbol_.cols()) throw DimensionMismatch("DiffOp: symbol must be square");
}

std::map<int, RatMat> DiffOp::coefficients() const {
    std::map<int, RatMat> out;
    if (symbol_.is_zero()) return out;
    for (int e = symbol_.min_exp(); e <= symbol_.max_exp(); ++e) {
        RatMat c = symbol_.coeff(e);
        if (!c.is_zero()) out.emplace(-e, std::move(c));  // L(b) is the coefficient of z^{-b}
    }
    return out;
}

DiffOp DiffOp::operator*(const DiffOp& o) const { return DiffOp(symbol_ * o.symbol()); }

LaurentPoly delta_symbol(int power) {
    LaurentPoly d(-1, {Rational(1), Rational(-1)});  // z^{-1} - 1
    LaurentPoly r(Rational(1));
    for (int i = 0; i < power; ++i) r = r * d;
    return r;
}

DiffOp delta_block(int d) {
    if (d < 1) throw std::invalid_argument("delta_block: d must be >= 1");
    LaurentMatrix m = LaurentMatrix::identity(d + 1);
    m.at(d, d) = delta_symbol();
    return DiffOp(std::move(m));
}

DiffOp taylor(int d, TaylorVariant variant) {
    if (d < 0) throw std::invalid_argument("taylor: d must be >= 0");
    if (d == 0) {
        LaurentMatrix m(1, 1);
        m.at(0, 0) = (variant == TaylorVariant::complete) ? delta_symbol() : LaurentPoly(Rational(1));
        return DiffOp(std::move(m));
    }
    LaurentMatrix m(d + 1, d + 1);
    int band_end = (variant == TaylorVariant::prime) ? d - 1 : d;
    for (int i = 0; i < d; ++i) {
        m.at(i, i) = delta_symbol();
        for (int j = i + 1; j <= band_end; ++j)
            m.at(i, j) = LaurentPoly(Rational(mpz_class(-1), factorial(j - i)));
    }
    m.at(d, d) = (variant == TaylorVariant::complete) ? delta_symbol() : LaurentPoly(Rational(1));
    return DiffOp(std::move(m));
}

DiffOp augmented_taylor(int d, int n) {
    if (d < 1) throw std::invalid_argument("augmented_taylor: d must be >= 1");
    if (n < d) throw std::invalid_argument("augmented_taylor: n must be >= d");
    LaurentMatrix m(d + 1, d + 1);
    // upper-left block T~_{d-1}
    const LaurentMatrix& block = taylor(d - 1, TaylorVariant::complete).symbol();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = block.at(i, j);
    // last column: row i carries -sum_{k=0}^{n-d} G_k^{d-i} Delta^k
    for (int i = 0; i < d; ++i) {
        LaurentPoly s;
        for (int k = 0; k <= n - d; ++k) s += gregory_g(k, d - i) * delta_symbol(k);
        m.at(i, d) = -s;
    }
    m.at(d, d) = delta_symbol(n + 1 - d);
    return DiffOp(std::move(m));
}

DiffOp gauss_step(const RatVec& y) {
    if (y.size() < 2) throw DimensionMismatch("gauss_step: y must have length d+1 >= 2");
    if (!y.back().is_zero()) throw std::invalid_argument("gauss_step: last entry of y must be 0");
    int d = static_cast<int>(y.size()) - 1;
    LaurentMatrix m = LaurentMatrix::identity(d + 1);
    for (int i = 0; i < d; ++i) m.at(i, d) = LaurentPoly(-y[static_cast<std::size_t>(i)]);
    m.at(d, d) = delta_symbol();
    return DiffOp(std::move(m));
}

RatMat gauss_matrix(const RatVec& y) {
    if (y.empty() || !y.back().is_zero())
        throw std::invalid_argument("gauss_matrix: last entry of y must be 0");
    int d = static_cast<int>(y.size()) - 1;
    RatMat m = RatMat::identity(d + 1);
    for (int i = 0; i < d; ++i) m.at(i, d) = y[static_cast<std::size_t>(i)];
    return m;
}

RatMat gauss_matrix_inverse(const RatVec& y) {
    RatVec neg = y;
    for (auto& v : neg) v = -v;
    return gauss_matrix(neg);
}

DilationMatrix::DilationMatrix(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("DilationMatrix: d must be >= 1");
}

Rational DilationMatrix::entry(int k, int e) const {
    if (k < 0 || k > d_) throw std::out_of_range("DilationMatrix::entry");
    return Rational::pow2(-k * e);
}

RatMat DilationMatrix::pow(int e) const {
    RatMat m(d_ + 1, d_ + 1);
    for (int k = 0; k <= d_; ++k) m.at(k, k) = entry(k, e);
    return m;
}

}  // namespace hsub
