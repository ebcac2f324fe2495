#include "zvk/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace zvk {
namespace {

bool pivot_min_abs(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < a.size(); ++i)
        for (std::size_t j = t; j < a[i].size(); ++j) {
            if (a[i][j] == 0) continue;
            mpz_class v = abs(a[i][j]);
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

std::vector<mpz_class> smith_diagonal(IntMatrix a) {
    std::vector<mpz_class> diag;
    if (a.empty() || a[0].empty()) return diag;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = t, pj = t;
        if (!pivot_min_abs(a, t, pi, pj)) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);  // remainder is smaller; make it the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the remaining block for the chain to hold
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m, int cols) {
    AbelianInvariants inv;
    std::vector<mpz_class> d = smith_diagonal(m);
    int rank = 0;
    for (const mpz_class& x : d)
        if (x != 0) ++rank;
    inv.free_rank = cols - rank;
    for (const mpz_class& x : d)
        if (x > 1) inv.torsion.push_back(x);
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
    IntMatrix m;
    for (const Word& r : p.relators) {
        std::vector<mpz_class> row(p.rank, 0);
        for (int x : r.letters()) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
    p.validate();
    return cokernel_invariants(exponent_matrix(p), p.rank);
}

mpz_class integer_determinant(const IntMatrix& m) {
    // fraction-free Bareiss elimination
    std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace zvk
