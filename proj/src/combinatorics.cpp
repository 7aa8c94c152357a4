#include "hsub/combinatorics.hpp"

#include <stdexcept>

namespace hsub {

namespace {

void check_nonneg(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

}  // namespace

void CoeffTable::grow_stirling2(int n) {
    if (s2_.empty()) s2_.push_back({mpz_class(1)});  // {0,0} = 1
    while (static_cast<int>(s2_.size()) <= n) {
        int r = static_cast<int>(s2_.size());
        std::vector<mpz_class> row(static_cast<std::size_t>(r) + 1);
        row[0] = 0;
        for (int m = 1; m <= r; ++m) {
            const auto& prev = s2_[static_cast<std::size_t>(r - 1)];
            mpz_class same = (m < r) ? prev[static_cast<std::size_t>(m)] : mpz_class(0);
            row[static_cast<std::size_t>(m)] = m * same + prev[static_cast<std::size_t>(m - 1)];
        }
        s2_.push_back(std::move(row));
    }
}

mpz_class CoeffTable::stirling2(int n, int m) {
    check_nonneg(n, "stirling2");
    check_nonneg(m, "stirling2");
    if (m > n) return 0;
    grow_stirling2(n);
    return s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

void CoeffTable::grow_stirling1(int n) {
    if (s1_.empty()) s1_.push_back({mpz_class(1)});  // [0,0] = 1
    while (static_cast<int>(s1_.size()) <= n) {
        int r = static_cast<int>(s1_.size());
        std::vector<mpz_class> row(static_cast<std::size_t>(r) + 1);
        row[0] = 0;
        for (int m = 1; m <= r; ++m) {
            const auto& prev = s1_[static_cast<std::size_t>(r - 1)];
            mpz_class same = (m < r) ? prev[static_cast<std::size_t>(m)] : mpz_class(0);
            row[static_cast<std::size_t>(m)] = (r - 1) * same + prev[static_cast<std::size_t>(m - 1)];
        }
        s1_.push_back(std::move(row));
    }
}

mpz_class CoeffTable::stirling1_unsigned(int n, int m) {
    check_nonneg(n, "stirling1");
    check_nonneg(m, "stirling1");
    if (m > n) return 0;
    grow_stirling1(n);
    return s1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

mpz_class CoeffTable::stirling1_signed(int n, int m) {
    mpz_class u = stirling1_unsigned(n, m);
    return ((n - m) % 2 != 0) ? mpz_class(-u) : u;
}

void CoeffTable::grow_gregory(int n, int k) {
    while (static_cast<int>(g_.size()) < k) g_.emplace_back();
    auto& row = g_[static_cast<std::size_t>(k - 1)];
    if (k == 1) {
        if (row.empty()) row.push_back(Rational(1));  // G_0^1 = 1/1!
        while (static_cast<int>(row.size()) <= n) {
            int m = static_cast<int>(row.size());
            // G_m^1 = (1/m!) sum_j s(m,j) / (j+1)
            Rational sum(0);
            for (int j = 1; j <= m; ++j) sum += Rational(stirling1_signed(m, j), mpz_class(j + 1));
            row.push_back(Rational(1, factorial(m)) * sum);
        }
        return;
    }
    grow_gregory(n + 1, k - 1);  // recursion consumes the previous row up to n+1
    if (row.empty()) row.push_back(Rational(mpz_class(1), factorial(k)));  // G_0^k = 1/k!
    const auto& prev = g_[static_cast<std::size_t>(k - 2)];
    while (static_cast<int>(row.size()) <= n) {
        int m = static_cast<int>(row.size());
        Rational v = Rational(1, 1 - k) * (Rational(m - 1) * prev[static_cast<std::size_t>(m)] +
                                           Rational(m + 1) * prev[static_cast<std::size_t>(m + 1)]);
        row.push_back(v);
    }
}

Rational CoeffTable::gregory(int n, int k) {
    check_nonneg(n, "gregory");
    if (k < 1) throw std::invalid_argument("gregory: k must be >= 1");
    grow_gregory(n, k);
    return g_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
}

namespace {

CoeffTable& local_table() {
    thread_local CoeffTable t;
    return t;
}

}  // namespace

mpz_class stirling2(int n, int m) { return local_table().stirling2(n, m); }
mpz_class stirling1_unsigned(int n, int m) { return local_table().stirling1_unsigned(n, m); }
mpz_class stirling1_signed(int n, int m) { return local_table().stirling1_signed(n, m); }
Rational gregory_g(int n, int k) { return local_table().gregory(n, k); }

Rational p_cauchy(int n, int p) {
    check_nonneg(n, "p_cauchy");
    check_nonneg(p, "p_cauchy");
    return Rational(factorial(n) * factorial(p + 1)) * gregory_g(n, p + 1);
}

Rational gamma_coeff(int j, int m) {
    check_nonneg(j, "gamma_coeff");
    check_nonneg(m, "gamma_coeff");
    if (m > j) return Rational(0);
    return Rational(factorial(m) * stirling2(j, m), factorial(j));
}

RatVec coeff_vector_a(int j, int d) {
    check_nonneg(j, "coeff_vector_a");
    if (d < 1) throw std::invalid_argument("coeff_vector_a: d must be >= 1");
    RatVec a(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = Rational(mpz_class(1), factorial(j + d - i));
    return a;
}

RatVec coeff_vector_y(int j, int d) {
    check_nonneg(j, "coeff_vector_y");
    if (d < 1) throw std::invalid_argument("coeff_vector_y: d must be >= 1");
    RatVec y(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int i = 0; i < d; ++i) y[static_cast<std::size_t>(i)] = gregory_g(j, d - i);
    return y;
}

std::pair<RatVec, RatVec> coeff_vectors(int j, int d) {
    return {coeff_vector_a(j, d), coeff_vector_y(j, d)};
}

RatVec hat(RatVec v) {
    if (!v.empty()) v.back() = Rational(0);
    return v;
}

}  // namespace hsub
