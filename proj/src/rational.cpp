#include "hsub/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hsub/errors.hpp"

namespace hsub {

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    // grammar: -? digits ( "/" digits )?   with a positive denominator
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw FormatError("invalid rational: '" + s + "'");
    std::size_t den_begin = 0, den_end = 0;
    if (i < s.size()) {
        if (s[i] != '/') throw FormatError("invalid rational: '" + s + "'");
        den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin) throw FormatError("invalid rational: '" + s + "'");
        den_end = i;
    }
    if (i != s.size()) throw FormatError("invalid rational: '" + s + "'");

    mpz_class num(s.substr(0, den_begin == 0 ? s.size() : den_begin - 1));
    mpz_class den = den_begin == 0 ? mpz_class(1) : mpz_class(s.substr(den_begin, den_end - den_begin));
    if (den == 0) throw FormatError("invalid rational (zero denominator): '" + s + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow2(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational::pow: zero base, negative exponent");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), a);
    return e >= 0 ? Rational(num, den) : Rational(den, num);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace hsub
