#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsub/poly.hpp"
#include "hsub/rational.hpp"

namespace hsub {

/// Laurent polynomial over Rational, stored as the lowest exponent plus
/// coefficients for consecutive exponents. First and last stored
/// coefficients are nonzero unless the element is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    explicit LaurentPoly(const Rational& c);
    LaurentPoly(int low, std::vector<Rational> coeffs);

    static LaurentPoly monomial(int exp, const Rational& c = Rational(1));
    /// p(z) * z^shift viewed as a Laurent polynomial.
    static LaurentPoly from_poly(const Poly& p, int shift = 0);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const;  // only valid when nonzero
    int max_exp() const;
    Rational coeff(int e) const;

    /// z -> z^2 substitution, monomial-wise.
    LaurentPoly substitute_square() const;
    /// Multiply by z^e.
    LaurentPoly shifted(int e) const;

    /// Exact division; nullopt when *this is not a multiple of den.
    /// Throws on zero divisor.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& den) const;

    /// Rewrite as a polynomial in delta = z^{-1} - 1. Only defined when no
    /// positive powers of z occur; throws std::domain_error otherwise.
    Poly delta_expansion() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;  // ascending powers of z

private:
    void normalize();
    int low_ = 0;
    std::vector<Rational> c_;
};

}  // namespace hsub
