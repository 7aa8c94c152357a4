#pragma once

#include <string>
#include <vector>

#include "hsub/rational.hpp"

namespace hsub {

/// Univariate polynomial with Rational coefficients, stored by ascending
/// degree with trailing zeros trimmed. degree() of the zero polynomial is -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(int deg, const Rational& c = Rational(1));
    static Poly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    Poly derivative(int times = 1) const;
    Poly antiderivative() const;  // constant term 0

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    Poly shift(const Rational& t) const;      // x -> x + t
    Poly scale_arg(const Rational& c) const;  // x -> c*x

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// k-th forward difference with unit step, p(x+1) - p(x) iterated.
Poly forward_difference(const Poly& p, int k = 1);

}  // namespace hsub
