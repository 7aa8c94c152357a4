#include "hsub/subdivision.hpp"

#include <stdexcept>

#include "hsub/errors.hpp"
#include "hsub/operators.hpp"

namespace hsub {

namespace {

bool zero_mat(const RatMat& m) { return m.is_zero(); }

bool zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

Mask::Mask(int d, int offset, std::vector<RatMat> matrices) : d_(d), offset_(offset), mats_(std::move(matrices)) {
    if (d < 1) throw std::invalid_argument("Mask: d must be >= 1");
    for (const auto& m : mats_)
        if (m.rows() != d + 1 || m.cols() != d + 1) throw DimensionMismatch("Mask: matrix size != d+1");
    // trim zero boundary matrices
    std::size_t begin = 0;
    while (begin < mats_.size() && zero_mat(mats_[begin])) ++begin;
    std::size_t end = mats_.size();
    while (end > begin && zero_mat(mats_[end - 1])) --end;
    offset_ += static_cast<int>(begin);
    mats_ = std::vector<RatMat>(mats_.begin() + static_cast<long>(begin), mats_.begin() + static_cast<long>(end));
    if (mats_.empty()) offset_ = 0;
}

RatMat Mask::at(int alpha) const {
    if (is_zero() || alpha < lo() || alpha > hi()) return RatMat(d_ + 1, d_ + 1);
    return mats_[static_cast<std::size_t>(alpha - offset_)];
}

LaurentMatrix Mask::symbol() const {
    LaurentMatrix s(d_ + 1, d_ + 1);
    for (std::size_t k = 0; k < mats_.size(); ++k) {
        int alpha = offset_ + static_cast<int>(k);
        for (int i = 0; i <= d_; ++i)
            for (int j = 0; j <= d_; ++j) {
                const Rational& v = mats_[k].at(i, j);
                if (!v.is_zero()) s.at(i, j) += LaurentPoly::monomial(alpha, v);
            }
    }
    return s;
}

Mask Mask::from_symbol(const LaurentMatrix& s) {
    if (s.rows() != s.cols()) throw DimensionMismatch("Mask::from_symbol: symbol not square");
    int d = s.rows() - 1;
    if (s.is_zero()) return Mask(d, 0, {});
    int lo = s.min_exp(), hi = s.max_exp();
    std::vector<RatMat> mats;
    mats.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) mats.push_back(s.coeff(e));
    return Mask(d, lo, std::move(mats));
}

VecSeq::VecSeq(int d, int offset, std::vector<RatVec> vectors) : d_(d), offset_(offset), vecs_(std::move(vectors)) {
    if (d < 1) throw std::invalid_argument("VecSeq: d must be >= 1");
    for (const auto& v : vecs_)
        if (static_cast<int>(v.size()) != d + 1) throw DimensionMismatch("VecSeq: vector size != d+1");
    std::size_t begin = 0;
    while (begin < vecs_.size() && zero_vec(vecs_[begin])) ++begin;
    std::size_t end = vecs_.size();
    while (end > begin && zero_vec(vecs_[end - 1])) --end;
    offset_ += static_cast<int>(begin);
    vecs_ = std::vector<RatVec>(vecs_.begin() + static_cast<long>(begin), vecs_.begin() + static_cast<long>(end));
    if (vecs_.empty()) offset_ = 0;
}

VecSeq VecSeq::zero(int d) { return VecSeq(d, 0, {}); }

VecSeq VecSeq::impulse(int d, int alpha, int k) {
    if (k < 0 || k > d) throw std::out_of_range("VecSeq::impulse: component out of range");
    RatVec v(static_cast<std::size_t>(d) + 1, Rational(0));
    v[static_cast<std::size_t>(k)] = Rational(1);
    return VecSeq(d, alpha, {std::move(v)});
}

RatVec VecSeq::at(int alpha) const {
    if (is_zero() || alpha < lo() || alpha > hi()) return RatVec(static_cast<std::size_t>(d_) + 1, Rational(0));
    return vecs_[static_cast<std::size_t>(alpha - offset_)];
}

LaurentMatrix VecSeq::symbol() const {
    LaurentMatrix s(d_ + 1, 1);
    for (std::size_t k = 0; k < vecs_.size(); ++k) {
        int alpha = offset_ + static_cast<int>(k);
        for (int i = 0; i <= d_; ++i) {
            const Rational& v = vecs_[k][static_cast<std::size_t>(i)];
            if (!v.is_zero()) s.at(i, 0) += LaurentPoly::monomial(alpha, v);
        }
    }
    return s;
}

VecSeq VecSeq::transformed(const RatMat& m) const {
    std::vector<RatVec> out;
    out.reserve(vecs_.size());
    for (const auto& v : vecs_) out.push_back(m * v);
    return VecSeq(d_, offset_, std::move(out));
}

namespace {

// shared kernel: out[idx] = sum_beta A(lo_out + idx - 2 beta) c(beta)
RatVec apply_at(const Mask& A, const VecSeq& c, int alpha) {
    const int d = A.d();
    RatVec acc(static_cast<std::size_t>(d) + 1, Rational(0));
    // alpha - 2 beta in [A.lo(), A.hi()]  =>  beta in [(alpha-A.hi()+1)/2, (alpha-A.lo())/2]
    int blo = alpha - A.hi();
    blo = (blo >= 0) ? (blo + 1) / 2 : blo / 2;  // ceil
    int bhi = alpha - A.lo();
    bhi = (bhi >= 0) ? bhi / 2 : (bhi - 1) / 2;  // floor
    blo = std::max(blo, c.lo());
    bhi = std::min(bhi, c.hi());
    for (int beta = blo; beta <= bhi; ++beta) {
        const RatMat m = A.at(alpha - 2 * beta);
        const RatVec v = c.at(beta);
        for (int i = 0; i <= d; ++i) {
            Rational s(0);
            for (int j = 0; j <= d; ++j)
                if (!m.at(i, j).is_zero()) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
            acc[static_cast<std::size_t>(i)] += s;
        }
    }
    return acc;
}

}  // namespace

VecSeq mask_apply_serial(const Mask& A, const VecSeq& c) {
    if (A.d() != c.d()) throw DimensionMismatch("mask_apply: d mismatch");
    if (A.is_zero() || c.is_zero()) return VecSeq::zero(A.d());
    const int lo = 2 * c.lo() + A.lo();
    const int hi = 2 * c.hi() + A.hi();
    std::vector<RatVec> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int alpha = lo; alpha <= hi; ++alpha) out.push_back(apply_at(A, c, alpha));
    return VecSeq(A.d(), lo, std::move(out));
}

VecSeq mask_apply(const Mask& A, const VecSeq& c) {
    if (A.d() != c.d()) throw DimensionMismatch("mask_apply: d mismatch");
    if (A.is_zero() || c.is_zero()) return VecSeq::zero(A.d());
    const int lo = 2 * c.lo() + A.lo();
    const int hi = 2 * c.hi() + A.hi();
    const int n = hi - lo + 1;
    if (n < 512) return mask_apply_serial(A, c);
    std::vector<RatVec> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < n; ++idx) out[static_cast<std::size_t>(idx)] = apply_at(A, c, lo + idx);
    return VecSeq(A.d(), lo, std::move(out));
}

std::pair<RatMat, RatMat> coset_sums(const Mask& A) {
    RatMat even(A.d() + 1, A.d() + 1), odd(A.d() + 1, A.d() + 1);
    for (int alpha = A.lo(); alpha <= A.hi() && !A.is_zero(); ++alpha) {
        if (alpha % 2 == 0)
            even = even + A.at(alpha);
        else
            odd = odd + A.at(alpha);
    }
    return {even, odd};
}

Mask hermite_level_mask(const Mask& A, int level) {
    if (level < 0) throw std::invalid_argument("hermite_level_mask: negative level");
    DilationMatrix dil(A.d());
    RatMat left = dil.pow(-level - 1);
    RatMat right = dil.pow(level);
    std::vector<RatMat> mats;
    mats.reserve(A.matrices().size());
    for (const auto& m : A.matrices()) mats.push_back(left * m * right);
    return Mask(A.d(), A.lo(), std::move(mats));
}

VecSeq hermite_iterate(const Mask& A, const VecSeq& c0, int levels, bool scaled) {
    if (A.d() != c0.d()) throw DimensionMismatch("hermite_iterate: d mismatch");
    if (levels < 1) throw std::invalid_argument("hermite_iterate: levels must be >= 1");
    VecSeq c = c0;
    for (int n = 0; n < levels; ++n) c = mask_apply(hermite_level_mask(A, n), c);
    if (scaled) c = c.transformed(DilationMatrix(A.d()).pow(levels));
    return c;
}

}  // namespace hsub
