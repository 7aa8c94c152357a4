#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace hsub {

/// Arbitrary-precision exact rational, the ground field of the library.
/// Invariants: always reduced to lowest terms, denominator > 0, zero is 0/1.
/// All arithmetic and comparisons are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Text form: "p" or "p/q" with q > 0 omitted when 1, optional leading
    /// '-', no whitespace. Unreduced input is accepted and canonicalized.
    static Rational parse(const std::string& s);
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;
    double to_double() const { return v_.get_d(); }

    /// Exact 2^e for any integer e.
    static Rational pow2(int e);
    /// Exact integer power; negative e inverts (throws on zero base).
    Rational pow(int e) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;  // canonical by construction
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

}  // namespace hsub
