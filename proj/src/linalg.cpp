#include "hsub/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "hsub/errors.hpp"

namespace hsub {

RatMat::RatMat(int rows, int cols, const Rational& fill)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative dimension");
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMat RatMat::diagonal(const RatVec& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

bool RatMat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator-() const {
    RatMat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("RatMat +: shape mismatch");
    RatMat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) { return a + (-b); }

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("RatMat *: inner dimensions differ");
    RatMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatVec operator*(const RatMat& a, const RatVec& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionMismatch("RatMat * vec: size mismatch");
    RatVec r(static_cast<std::size_t>(a.rows_), Rational(0));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r[static_cast<std::size_t>(i)] += a.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

RatMat operator*(const Rational& s, const RatMat& a) {
    RatMat r = a;
    for (auto& x : r.e_) x *= s;
    return r;
}

std::string RatMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        if (i + 1 != rows_) os << "\n";
    }
    return os.str();
}

namespace {

// Fraction-free row echelon form (Bareiss) of an integer matrix.
// Returns pivot columns; `a` is modified in place.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& a) {
    std::vector<int> pivot_cols;
    if (a.empty()) return pivot_cols;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(piv)]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
        }
        prev = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::vector<RatVec> rational_nullspace(const RatMat& m) {
    const int rows = m.rows(), cols = m.cols();
    if (cols == 0) return {};
    // clear denominators row by row
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    }
    std::vector<int> pivots = bareiss_echelon(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVec v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(f)] = Rational(1);
        // back-substitute through the echelon rows
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            int pc = pivots[static_cast<std::size_t>(r)];
            Rational s(0);
            for (int j = pc + 1; j < cols; ++j) {
                const mpz_class& aij = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (aij != 0 && !v[static_cast<std::size_t>(j)].is_zero())
                    s += Rational(aij) * v[static_cast<std::size_t>(j)];
            }
            v[static_cast<std::size_t>(pc)] =
                -s / Rational(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
        }
        // normalize: first nonzero entry = 1
        for (const auto& x : v)
            if (!x.is_zero()) {
                Rational inv = Rational(1) / x;
                for (auto& y : v) y *= inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Exact Gauss-Jordan; returns pivot columns of the reduced matrix.
std::vector<int> rref_inplace(RatMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const RatMat& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve_linear: rhs size mismatch");
    RatMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref_inplace(aug);
    LinearSolution sol;
    sol.aug_rank = static_cast<int>(pivots.size());
    sol.rank = sol.aug_rank;
    bool consistent = true;
    if (!pivots.empty() && pivots.back() == m.cols()) {
        consistent = false;
        sol.rank -= 1;
        pivots.pop_back();
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    if (consistent) {
        RatVec x(static_cast<std::size_t>(m.cols()), Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
        sol.particular = std::move(x);
    }
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVec v(static_cast<std::size_t>(m.cols()), Rational(0));
        v[static_cast<std::size_t>(f)] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -aug.at(static_cast<int>(r), f);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
    int n = m.rows();
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw SingularMatrix("inverse: singular matrix");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

int rank(const RatMat& m) {
    RatMat c = m;
    return static_cast<int>(rref_inplace(c).size());
}

}  // namespace hsub
