#pragma once

#include <string>
#include <vector>

#include "hsub/poly.hpp"
#include "hsub/rational.hpp"

namespace hsub {

/// Function with derivatives of every order: exp, sin, or a polynomial with
/// rational coefficients. Polynomial instances additionally support the
/// exact-arithmetic paths below.
class AnalyticFn {
public:
    enum class Kind { exp, sin, poly };

    static AnalyticFn make_exp();
    static AnalyticFn make_sin();
    static AnalyticFn make_poly(Poly p);
    /// "exp", "sin", or "poly:c0,c1,..." with rational coefficients by
    /// ascending degree.
    static AnalyticFn parse(const std::string& spec);

    Kind kind() const { return kind_; }
    bool is_poly() const { return kind_ == Kind::poly; }
    const Poly& poly() const;

    AnalyticFn derivative(int k = 1) const;
    double eval(double x) const;

private:
    AnalyticFn(Kind k, Poly p, int phase) : kind_(k), poly_(std::move(p)), phase_(phase) {}
    Kind kind_;
    Poly poly_;  // poly kind only
    int phase_;  // sin kind: derivative count mod 4
};

/// I^k_n f(x1; x0) = sum_{m=0}^{n} G_m^k Delta^m f(x0) (x1-x0)^k with
/// unit-step forward differences.
double forward_int_sum(const AnalyticFn& f, int k, int n, double x0, double x1);
Rational forward_int_sum_exact(const Poly& f, int k, int n, const Rational& x0, const Rational& x1);

/// k-fold iterated integral of f from x0 to x1, reduced to the single
/// weighted integral int (x1-t)^{k-1}/(k-1)! f(t) dt and evaluated by
/// adaptive Gauss-Kronrod quadrature to tolerance tol.
double iterated_integral(const AnalyticFn& f, int k, double x0, double x1, double tol);
Rational iterated_integral_exact(const Poly& f, int k, const Rational& x0, const Rational& x1);

/// Remainder R^k_n f(x1; x0) = iterated integral minus I^k_n.
double remainder(const AnalyticFn& f, int k, int n, double x0, double x1, double tol);
Rational remainder_exact(const Poly& f, int k, int n, const Rational& x0, const Rational& x1);

struct InterpretRow {
    int row;
    double operator_side;
    double remainder_side;
    double discrepancy;
};

struct InterpretReport {
    std::vector<InterpretRow> rows;
    double max_abs_discrepancy = 0.0;
    bool exact = false;  // polynomial input, computed end-to-end in rationals
};

/// Evaluates T~_d^n on unit-spaced samples of v(f) at x and compares row
/// j < d against R^{d-j}_{n-d} f^{(d)}(x+1; x) and row d against
/// Delta^{n+1-d} f^{(d)}(x). Polynomial f with the rational x runs exactly.
InterpretReport interpret_check(const AnalyticFn& f, int d, int n, const Rational& x, double tol);

}  // namespace hsub
