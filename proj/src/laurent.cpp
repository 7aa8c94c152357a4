#include "hsub/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hsub {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
    if (c.is_zero()) return LaurentPoly();
    return LaurentPoly(exp, {c});
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
    if (p.is_zero()) return LaurentPoly();
    return LaurentPoly(shift, p.coeffs());
}

void LaurentPoly::normalize() {
    std::size_t begin = 0;
    while (begin < c_.size() && c_[begin].is_zero()) ++begin;
    std::size_t end = c_.size();
    while (end > begin && c_[end - 1].is_zero()) --end;
    if (begin == end) {
        c_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<int>(begin);
    c_ = std::vector<Rational>(c_.begin() + static_cast<long>(begin), c_.begin() + static_cast<long>(end));
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero Laurent polynomial");
    return low_;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero Laurent polynomial");
    return low_ + static_cast<int>(c_.size()) - 1;
}

Rational LaurentPoly::coeff(int e) const {
    int i = e - low_;
    if (is_zero() || i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

LaurentPoly LaurentPoly::substitute_square() const {
    if (is_zero()) return LaurentPoly();
    std::vector<Rational> v(2 * (c_.size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
    return LaurentPoly(2 * low_, std::move(v));
}

LaurentPoly LaurentPoly::shifted(int e) const {
    if (is_zero()) return LaurentPoly();
    return LaurentPoly(low_ + e, c_);
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return LaurentPoly(low_, std::move(v));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this = *this - o;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int low = std::min(a.low_, b.low_);
    int high = std::max(a.max_exp(), b.max_exp());
    std::vector<Rational> v(static_cast<std::size_t>(high - low + 1), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[static_cast<std::size_t>(a.low_ - low) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[static_cast<std::size_t>(b.low_ - low) + i] += b.c_[i];
    return LaurentPoly(low, std::move(v));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(v));
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
    if (s.is_zero() || p.is_zero()) return LaurentPoly();
    std::vector<Rational> v = p.c_;
    for (auto& x : v) x *= s;
    return LaurentPoly(p.low_, std::move(v));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& den) const {
    if (den.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();
    // Strip z powers so both sides become ordinary polynomials with nonzero
    // constant term; any Laurent quotient is then an ordinary polynomial.
    std::vector<Rational> rem = c_;
    const std::vector<Rational>& q = den.c_;
    if (rem.size() < q.size()) return std::nullopt;
    std::vector<Rational> quot(rem.size() - q.size() + 1, Rational(0));
    const Rational& lead = q.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational f = rem[i + q.size() - 1] / lead;
        quot[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < q.size(); ++j) rem[i + j] -= f * q[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return LaurentPoly(low_ - den.low_, std::move(quot));
}

Poly LaurentPoly::delta_expansion() const {
    if (is_zero()) return Poly();
    if (max_exp() > 0) throw std::domain_error("delta expansion needs nonpositive powers of z only");
    // coefficient of u^m with u = z^{-1}; substitute u = 1 + delta
    int m_max = -low_;
    Poly result;
    Poly u(std::vector<Rational>{Rational(1), Rational(1)});  // 1 + delta
    Poly upow(Rational(1));
    for (int m = 0; m <= m_max; ++m) {
        Rational cm = coeff(-m);
        if (!cm.is_zero()) result += cm * upow;
        if (m != m_max) upow = upow * u;
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        int e = low_ + static_cast<int>(i);
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace hsub
