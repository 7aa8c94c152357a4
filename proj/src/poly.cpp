#include "hsub/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hsub {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::derivative(int times) const {
    Poly p = *this;
    for (int t = 0; t < times; ++t) {
        if (p.c_.empty()) return p;
        std::vector<Rational> d(p.c_.size() - 1);
        for (std::size_t i = 1; i < p.c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p.c_[i];
        p = Poly(std::move(d));
    }
    return p;
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> a(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    return Poly(std::move(a));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

Poly Poly::shift(const Rational& t) const {
    // Horner in (x + t), exact binomial expansion
    Poly acc;
    Poly lin(std::vector<Rational>{t, Rational(1)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
}

Poly Poly::scale_arg(const Rational& c) const {
    std::vector<Rational> v = c_;
    Rational p(1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        p *= c;
        v[i] *= p;
    }
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> v = p.c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly forward_difference(const Poly& p, int k) {
    Poly r = p;
    for (int i = 0; i < k; ++i) r = r.shift(Rational(1)) - r;
    return r;
}

}  // namespace hsub
