#include "hsub/remainder.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hsub/combinatorics.hpp"
#include "hsub/errors.hpp"
#include "hsub/operators.hpp"
#include "hsub/polyseq.hpp"

namespace hsub {

AnalyticFn AnalyticFn::make_exp() { return AnalyticFn(Kind::exp, Poly(), 0); }
AnalyticFn AnalyticFn::make_sin() { return AnalyticFn(Kind::sin, Poly(), 0); }
AnalyticFn AnalyticFn::make_poly(Poly p) { return AnalyticFn(Kind::poly, std::move(p), 0); }

AnalyticFn AnalyticFn::parse(const std::string& spec) {
    if (spec == "exp") return make_exp();
    if (spec == "sin") return make_sin();
    if (spec.rfind("poly:", 0) == 0) {
        std::vector<Rational> coeffs;
        std::string body = spec.substr(5);
        if (body.empty()) throw FormatError("empty polynomial spec");
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            coeffs.push_back(Rational::parse(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return make_poly(Poly(std::move(coeffs)));
    }
    throw FormatError("unknown function spec '" + spec + "' (want exp, sin, or poly:c0,c1,...)");
}

const Poly& AnalyticFn::poly() const {
    if (kind_ != Kind::poly) throw std::logic_error("AnalyticFn::poly: not a polynomial");
    return poly_;
}

AnalyticFn AnalyticFn::derivative(int k) const {
    switch (kind_) {
        case Kind::exp:
            return *this;
        case Kind::sin:
            return AnalyticFn(Kind::sin, Poly(), (phase_ + k) % 4);
        case Kind::poly:
            return AnalyticFn(Kind::poly, poly_.derivative(k), 0);
    }
    throw std::logic_error("AnalyticFn: bad kind");
}

double AnalyticFn::eval(double x) const {
    switch (kind_) {
        case Kind::exp:
            return std::exp(x);
        case Kind::sin:
            switch (phase_) {
                case 0: return std::sin(x);
                case 1: return std::cos(x);
                case 2: return -std::sin(x);
                default: return -std::cos(x);
            }
        case Kind::poly:
            return poly_.eval_double(x);
    }
    throw std::logic_error("AnalyticFn: bad kind");
}

namespace {

double forward_diff(const AnalyticFn& f, int m, double x0) {
    // Delta^m f(x0) = sum_i (-1)^{m-i} C(m,i) f(x0 + i)
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
        double c = binomial(m, i).get_d();
        double term = c * f.eval(x0 + i);
        s += ((m - i) % 2 == 0) ? term : -term;
    }
    return s;
}

double adaptive_integral(const std::function<double(double)>& f, double a, double b, double tol) {
    double error = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol, &error);
    if (!std::isfinite(value) || error > std::max(tol, tol * std::abs(value)) * 100)
        throw QuadratureError("quadrature did not converge to the requested tolerance");
    return value;
}

}  // namespace

double forward_int_sum(const AnalyticFn& f, int k, int n, double x0, double x1) {
    if (k < 1) throw std::invalid_argument("forward_int_sum: k must be >= 1");
    if (n < 0) throw std::invalid_argument("forward_int_sum: n must be >= 0");
    double h = x1 - x0;
    double hk = std::pow(h, k);
    double s = 0.0;
    for (int m = 0; m <= n; ++m) s += gregory_g(m, k).to_double() * forward_diff(f, m, x0);
    return s * hk;
}

Rational forward_int_sum_exact(const Poly& f, int k, int n, const Rational& x0, const Rational& x1) {
    if (k < 1) throw std::invalid_argument("forward_int_sum_exact: k must be >= 1");
    if (n < 0) throw std::invalid_argument("forward_int_sum_exact: n must be >= 0");
    Rational hk = (x1 - x0).pow(k);
    Rational s(0);
    Poly diff = f;
    for (int m = 0; m <= n; ++m) {
        s += gregory_g(m, k) * diff.eval(x0);
        diff = forward_difference(diff);
    }
    return s * hk;
}

double iterated_integral(const AnalyticFn& f, int k, double x0, double x1, double tol) {
    if (k < 1) throw std::invalid_argument("iterated_integral: k must be >= 1");
    if (tol <= 0) throw std::invalid_argument("iterated_integral: tol must be positive");
    double kfac = factorial(k - 1).get_d();
    auto integrand = [&](double t) { return std::pow(x1 - t, k - 1) / kfac * f.eval(t); };
    return adaptive_integral(integrand, x0, x1, tol);
}

Rational iterated_integral_exact(const Poly& f, int k, const Rational& x0, const Rational& x1) {
    if (k < 1) throw std::invalid_argument("iterated_integral_exact: k must be >= 1");
    Poly cur = f;
    for (int i = 0; i < k; ++i) {
        Poly anti = cur.antiderivative();
        cur = anti - Poly(anti.eval(x0));
    }
    return cur.eval(x1);
}

double remainder(const AnalyticFn& f, int k, int n, double x0, double x1, double tol) {
    return iterated_integral(f, k, x0, x1, tol) - forward_int_sum(f, k, n, x0, x1);
}

Rational remainder_exact(const Poly& f, int k, int n, const Rational& x0, const Rational& x1) {
    return iterated_integral_exact(f, k, x0, x1) - forward_int_sum_exact(f, k, n, x0, x1);
}

InterpretReport interpret_check(const AnalyticFn& f, int d, int n, const Rational& x, double tol) {
    if (d < 1 || n < d) throw std::invalid_argument("interpret_check: need n >= d >= 1");
    InterpretReport report;
    DiffOp op = augmented_taylor(d, n);

    if (f.is_poly()) {
        // exact branch: both sides in rational arithmetic end to end
        PolyVec res = diffop_apply(op, vpoly(f.poly(), d));
        Poly fd = f.poly().derivative(d);
        report.exact = true;
        for (int j = 0; j <= d; ++j) {
            Rational lhs = res.entry(j).eval(x);
            Rational rhs = (j < d) ? remainder_exact(fd, d - j, n - d, x, x + Rational(1))
                                   : forward_difference(fd, n + 1 - d).eval(x);
            Rational diff = lhs - rhs;
            report.rows.push_back({j, lhs.to_double(), rhs.to_double(), diff.is_zero() ? 0.0 : diff.to_double()});
        }
    } else {
        double xd = x.to_double();
        // operator side: coefficients of T~_d^n applied to samples of v(f)
        auto coeffs = op.coefficients();
        std::vector<double> lhs(static_cast<std::size_t>(d) + 1, 0.0);
        for (const auto& [beta, mat] : coeffs)
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    double c = mat.at(i, j).to_double();
                    if (c != 0.0) lhs[static_cast<std::size_t>(i)] += c * f.derivative(j).eval(xd + beta);
                }
        AnalyticFn fd = f.derivative(d);
        for (int j = 0; j <= d; ++j) {
            double rhs = (j < d) ? remainder(fd, d - j, n - d, xd, xd + 1.0, tol)
                                 : forward_diff(fd, n + 1 - d, xd);
            report.rows.push_back({j, lhs[static_cast<std::size_t>(j)], rhs,
                                   lhs[static_cast<std::size_t>(j)] - rhs});
        }
    }
    for (const auto& r : report.rows) report.max_abs_discrepancy = std::max(report.max_abs_discrepancy, std::abs(r.discrepancy));
    return report;
}

}  // namespace hsub
