#include "hsub/polyseq.hpp"

#include <stdexcept>

#include "hsub/errors.hpp"

namespace hsub {

PolyVec::PolyVec(std::vector<Poly> entries) : e_(std::move(entries)) {
    if (e_.size() < 2) throw DimensionMismatch("PolyVec: need at least 2 entries");
}

PolyVec PolyVec::zero(int d) { return PolyVec(std::vector<Poly>(static_cast<std::size_t>(d) + 1)); }

PolyVec PolyVec::outer(const RatVec& c, const Poly& p) {
    std::vector<Poly> e;
    e.reserve(c.size());
    for (const auto& ci : c) e.push_back(ci * p);
    return PolyVec(std::move(e));
}

PolyVec PolyVec::constant(const RatVec& c) {
    std::vector<Poly> e;
    e.reserve(c.size());
    for (const auto& ci : c) e.push_back(Poly(ci));
    return PolyVec(std::move(e));
}

bool PolyVec::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyVec PolyVec::shift(const Rational& t) const {
    std::vector<Poly> e;
    e.reserve(e_.size());
    for (const auto& p : e_) e.push_back(p.shift(t));
    return PolyVec(std::move(e));
}

PolyVec PolyVec::scale_arg(const Rational& c) const {
    std::vector<Poly> e;
    e.reserve(e_.size());
    for (const auto& p : e_) e.push_back(p.scale_arg(c));
    return PolyVec(std::move(e));
}

RatVec PolyVec::eval(const Rational& x) const {
    RatVec v;
    v.reserve(e_.size());
    for (const auto& p : e_) v.push_back(p.eval(x));
    return v;
}

PolyVec PolyVec::operator-() const {
    std::vector<Poly> e;
    e.reserve(e_.size());
    for (const auto& p : e_) e.push_back(-p);
    return PolyVec(std::move(e));
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
    if (o.e_.size() != e_.size()) throw DimensionMismatch("PolyVec +: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
    if (o.e_.size() != e_.size()) throw DimensionMismatch("PolyVec -: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    r += b;
    return r;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    r -= b;
    return r;
}

PolyVec operator*(const RatMat& m, const PolyVec& s) {
    if (m.cols() != s.d() + 1) throw DimensionMismatch("RatMat * PolyVec: size mismatch");
    std::vector<Poly> e(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& mij = m.at(i, j);
            if (!mij.is_zero()) e[static_cast<std::size_t>(i)] += mij * s.entry(j);
        }
    return PolyVec(std::move(e));
}

PolyVec operator*(const Rational& r, const PolyVec& s) {
    std::vector<Poly> e;
    e.reserve(s.entries().size());
    for (const auto& p : s.entries()) e.push_back(r * p);
    return PolyVec(std::move(e));
}

PolyVec vpoly(const Poly& p, int d) {
    if (d < 1) throw std::invalid_argument("vpoly: d must be >= 1");
    std::vector<Poly> e;
    e.reserve(static_cast<std::size_t>(d) + 1);
    Poly cur = p;
    for (int k = 0; k <= d; ++k) {
        e.push_back(cur);
        cur = cur.derivative();
    }
    return PolyVec(std::move(e));
}

PolyVec diffop_apply(const DiffOp& L, const PolyVec& s) {
    if (L.dim() != s.d() + 1) throw DimensionMismatch("diffop_apply: dimension mismatch");
    PolyVec acc = PolyVec::zero(s.d());
    for (const auto& [beta, mat] : L.coefficients()) acc += mat * s.shift(Rational(beta));
    return acc;
}

std::pair<PolyVec, PolyVec> mask_apply_poly(const Mask& A, const PolyVec& s) {
    if (A.d() != s.d()) throw DimensionMismatch("mask_apply_poly: d mismatch");
    PolyVec even = PolyVec::zero(s.d());
    PolyVec odd = PolyVec::zero(s.d());
    if (A.is_zero()) return {even, odd};
    for (int alpha = A.lo(); alpha <= A.hi(); ++alpha) {
        RatMat m = A.at(alpha);
        if (m.is_zero()) continue;
        // alpha = 2 gamma + r: contribution A(alpha) * s(. - gamma)
        int gamma = (alpha >= 0) ? alpha / 2 : (alpha - 1) / 2;  // floor
        PolyVec term = m * s.shift(Rational(-gamma));
        if (alpha % 2 == 0)
            even += term;
        else
            odd += term;
    }
    return {even, odd};
}

Poly q_poly(const Poly& p, int d) {
    if (d < 1) throw std::invalid_argument("q_poly: d must be >= 1");
    int n = p.degree();
    if (n <= d) throw std::invalid_argument("q_poly: undefined for deg(p) <= d");
    Poly q;
    for (int k = 1; k <= n - d; ++k) q += Rational(mpz_class(1), factorial(k)) * p.derivative(k + d);
    return q;
}

}  // namespace hsub
