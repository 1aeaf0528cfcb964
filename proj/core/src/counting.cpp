#include "hyperchip/counting.hpp"

#include <algorithm>
#include <mutex>

namespace hyperchip {

namespace {

void check_u(const std::vector<int>& u) {
    if (u.empty()) throw domain_error("u must be nonempty");
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] < 0) throw domain_error("u entries must be nonnegative");
        if (k > 0 && u[k] < u[k - 1]) throw domain_error("u must be nondecreasing");
    }
}

mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

bool is_u_parking(const Configuration& c, const std::vector<int>& u) {
    check_u(u);
    if (c.size() != u.size()) throw domain_error("c and u must have the same length");
    Configuration s = c;
    for (int x : s)
        if (x < 0) throw domain_error("configuration entries must be nonnegative");
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] >= u[k]) return false;
    return true;
}

std::vector<int> u_vector_complete(int n, int d) {
    if (d < 2 || d > n + 1) throw domain_error("need 2 <= d <= n+1");
    std::vector<int> u(n);
    mpz_class full = binom(n, d - 1);
    for (int k = 1; k <= n; ++k) {
        mpz_class uk = (k <= n + 1 - d) ? full - binom(n - k, d - 1) : full;
        u[k - 1] = static_cast<int>(uk.get_si());
    }
    return u;
}

mpz_class steck_count(const std::vector<int>& u) {
    check_u(u);
    int n = static_cast<int>(u.size());
    // D_ij = u_i^(j-i+1) / (j-i+1)!, zero below the first subdiagonal
    std::vector<std::vector<mpq_class>> d(n, std::vector<mpq_class>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int p = j - i + 1;
            if (p < 0) continue;
            mpz_class num, fact;
            mpz_ui_pow_ui(num.get_mpz_t(), u[i - 1], p);
            mpz_fac_ui(fact.get_mpz_t(), p);
            d[i - 1][j - 1] = mpq_class(num, fact);
        }
    // Gaussian elimination over exact rationals
    mpq_class det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && d[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(d[p], d[k]);
            det = -det;
        }
        det *= d[k][k];
        for (int i = k + 1; i < n; ++i) {
            mpq_class f = d[i][k] / d[k][k];
            for (int j = k; j < n; ++j) d[i][j] -= f * d[k][j];
        }
    }
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    mpq_class total = det * nfact;
    total.canonicalize();
    if (total.get_den() != 1) throw domain_error("Steck count is not an integer");
    return total.get_num();
}

std::vector<Configuration> maximal_u_parking(const std::vector<int>& u) {
    check_u(u);
    if (u[0] == 0) return {};
    Configuration base(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) base[k] = u[k] - 1;
    std::vector<Configuration> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class stirling2(int n, int k) {
    if (n < 0 || k < 0) throw domain_error("Stirling indices must be nonnegative");
    static std::vector<std::vector<mpz_class>> table{{1}};  // table[n][k], k <= n
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        std::vector<mpz_class> row(m + 1);
        row[0] = 0;
        for (int j = 1; j <= m; ++j)
            row[j] = (j < m ? j * table[m - 1][j] + table[m - 1][j - 1] : table[m - 1][j - 1]);
        table.push_back(std::move(row));
    }
    return k > n ? mpz_class(0) : table[n][k];
}

mpz_class acyclic_count_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw domain_error("need m, n >= 1");
    mpz_class total = 0;
    for (int j = 1; j <= std::min(m + 1, n + 1); ++j) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), j - 1);
        total += f * f * stirling2(m + 1, j) * stirling2(n + 1, j);
    }
    return total;
}

}  // namespace hyperchip
