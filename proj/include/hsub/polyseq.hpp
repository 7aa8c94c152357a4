#pragma once

#include <utility>
#include <vector>

#include "hsub/operators.hpp"
#include "hsub/poly.hpp"
#include "hsub/subdivision.hpp"

namespace hsub {

/// Vector of d+1 polynomials, read as the polynomial vector sequence
/// alpha -> (entries_i(alpha))_i. All the §5-style identities are tested on
/// these as exact polynomial identities, never on sampled windows.
class PolyVec {
public:
    explicit PolyVec(std::vector<Poly> entries);
    static PolyVec zero(int d);
    /// Constant vector c times polynomial p, entries c_i * p.
    static PolyVec outer(const RatVec& c, const Poly& p);
    /// Constant sequence with value c.
    static PolyVec constant(const RatVec& c);

    int d() const { return static_cast<int>(e_.size()) - 1; }
    const Poly& entry(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<Poly>& entries() const { return e_; }
    bool is_zero() const;

    /// Entrywise x -> x + t.
    PolyVec shift(const Rational& t) const;
    /// Entrywise x -> c x.
    PolyVec scale_arg(const Rational& c) const;
    /// Evaluate all entries at a point.
    RatVec eval(const Rational& x) const;

    PolyVec operator-() const;
    PolyVec& operator+=(const PolyVec& o);
    PolyVec& operator-=(const PolyVec& o);
    friend PolyVec operator+(const PolyVec& a, const PolyVec& b);
    friend PolyVec operator-(const PolyVec& a, const PolyVec& b);
    friend PolyVec operator*(const RatMat& m, const PolyVec& s);
    friend PolyVec operator*(const Rational& r, const PolyVec& s);

    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const PolyVec& a, const PolyVec& b) { return !(a == b); }

private:
    std::vector<Poly> e_;
};

/// v(p) = (p, p', ..., p^(d)).
PolyVec vpoly(const Poly& p, int d);

/// (L s)(alpha) = sum_b L(b) s(alpha + b), exact on polynomial sequences.
PolyVec diffop_apply(const DiffOp& L, const PolyVec& s);

/// Parity components of S_A s on polynomial input:
/// even(alpha) = (S_A s)(2 alpha), odd(alpha) = (S_A s)(2 alpha + 1).
std::pair<PolyVec, PolyVec> mask_apply_poly(const Mask& A, const PolyVec& s);

/// q = sum_{k=1}^{n-d} p^{(k+d)} / k! for deg(p) = n > d; degree n-d-1.
/// Throws std::invalid_argument when deg(p) <= d.
Poly q_poly(const Poly& p, int d);

}  // namespace hsub
