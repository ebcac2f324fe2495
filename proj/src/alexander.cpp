#include "zvk/alexander.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace zvk {

void AbelianLabel::validate(int rank) const {
    if (static_cast<int>(component.size()) != rank)
        throw std::invalid_argument("label must cover every generator");
    for (int c : component)
        if (c < 1 || c > vars) throw std::invalid_argument("label component index out of range");
}

LaurentPoly::Exponents AbelianLabel::vec(int generator) const {
    LaurentPoly::Exponents e(vars, 0);
    e[component[generator - 1] - 1] = 1;
    return e;
}

LaurentPoly fox_derivative_abelianized(const Word& w, int j, const AbelianLabel& lab) {
    LaurentPoly out(lab.vars);
    LaurentPoly::Exponents prefix(lab.vars, 0);
    for (int x : w.letters()) {
        int g = std::abs(x);
        if (g > static_cast<int>(lab.component.size()))
            throw std::out_of_range("word letter outside the label domain");
        LaurentPoly::Exponents ev = lab.vec(g);
        if (x > 0) {
            if (g == j) out.add_term(prefix, 1);
            for (int i = 0; i < lab.vars; ++i) prefix[i] += ev[i];
        } else {
            for (int i = 0; i < lab.vars; ++i) prefix[i] -= ev[i];
            if (g == j) out.add_term(prefix, -1);
        }
    }
    return out;
}

LaurentPoly::Exponents label_exponent(const Word& w, const AbelianLabel& lab) {
    LaurentPoly::Exponents v(lab.vars, 0);
    for (int x : w.letters()) {
        LaurentPoly::Exponents ev = lab.vec(std::abs(x));
        for (int i = 0; i < lab.vars; ++i) v[i] += x > 0 ? ev[i] : -ev[i];
    }
    return v;
}

PolyMatrix alexander_matrix(const GroupPresentation& p, const AbelianLabel& lab) {
    lab.validate(p.rank);
    PolyMatrix m;
    for (const Word& r : p.relators) {
        std::vector<LaurentPoly> row;
        for (int j = 1; j <= p.rank; ++j) row.push_back(fox_derivative_abelianized(r, j, lab));
        m.push_back(std::move(row));
    }
    return m;
}

GroupPresentation centralize_incompatible_relators(const GroupPresentation& p,
                                                   const AbelianLabel& lab) {
    lab.validate(p.rank);
    LaurentPoly::Exponents zero(lab.vars, 0);
    std::vector<Word> rels;
    for (const Word& r : p.relators) {
        if (label_exponent(r, lab) == zero) {
            rels.push_back(r);
        } else {
            for (int u = 1; u <= p.rank; ++u) {
                Word xu({u});
                rels.push_back(multiply(multiply(r, xu), multiply(invert(r), invert(xu))));
            }
        }
    }
    return make_presentation(p.rank, p.names, rels);
}

namespace {

LaurentPoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    LaurentPoly det;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        std::vector<int> subcols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != idx) subcols.push_back(cols[j]);
        std::vector<int> subrows(rows.begin() + 1, rows.end());
        LaurentPoly term = m[rows[0]][cols[idx]] * poly_minor(m, subrows, subcols);
        det += idx % 2 ? -term : term;
    }
    return det;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<LaurentPoly> fitting_ideal(const PolyMatrix& m, int k) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = cols;
    if (k < 0 || k > rank) throw std::out_of_range("fitting index out of range");
    int size = rank - k - kFittingOffset;
    int vars = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.vars()) vars = e.vars();
    if (size <= 0) return {LaurentPoly::constant(vars ? vars : 1, 1)};
    if (size > rows || size > cols) return {LaurentPoly(vars ? vars : 1)};

    std::set<std::string> seen;
    std::vector<LaurentPoly> gens;
    combinations(rows, size, [&](const std::vector<int>& rsel) {
        combinations(cols, size, [&](const std::vector<int>& csel) {
            LaurentPoly d = poly_minor(m, rsel, csel);
            if (d.is_zero()) return;
            LaurentPoly nd = -d;
            std::string key = std::min(d.to_string(), nd.to_string());
            if (seen.insert(key).second) gens.push_back(std::move(d));
        });
    });
    if (gens.empty()) gens.push_back(LaurentPoly(vars ? vars : 1));  // all minors vanish
    return gens;
}

namespace {

std::vector<CharacterPoint> grid_scan(int vars, int N, int jobs,
                                      const std::function<bool(const CharacterPoint&)>& accept) {
    long total = 1;
    for (int i = 0; i < vars; ++i) total *= N;
    auto point_at = [&](long idx) {
        std::vector<mpq_class> q(vars);
        for (int i = vars - 1; i >= 0; --i) {
            q[i] = mpq_class(idx % N, N);
            q[i].canonicalize();
            idx /= N;
        }
        return CharacterPoint(q);
    };
    std::vector<std::vector<CharacterPoint>> parts(std::max(jobs, 1));
    auto work = [&](int t, long lo, long hi) {
        for (long idx = lo; idx < hi; ++idx) {
            CharacterPoint pt = point_at(idx);
            if (accept(pt)) parts[t].push_back(pt);
        }
    };
    if (jobs <= 1) {
        work(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        long chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, t, lo, hi);
        }
        for (auto& th : threads) th.join();
    }
    std::vector<CharacterPoint> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CharacterPoint> charvar_points(const std::vector<LaurentPoly>& gens, int vars,
                                           int N, int jobs) {
    if (N < 1) throw std::invalid_argument("scan order must be positive");
    return grid_scan(vars, N, jobs, [&](const CharacterPoint& pt) {
        for (const LaurentPoly& g : gens)
            if (!vanishes_at(g, pt)) return false;
        return true;
    });
}

int rank_at_point(const PolyMatrix& m, const CharacterPoint& pt) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::vector<std::vector<CyclotomicValue>> a(rows, std::vector<CyclotomicValue>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = evaluate(m[i][j], pt);
    // fraction-free elimination: no inverses needed in Q[x]/Phi_N
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            CyclotomicValue f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                CyclotomicValue t = a[row][col] * a[i][j];
                CyclotomicValue s = f * a[row][j];
                for (auto& c : s.coeffs) c = -c;
                a[i][j] = t + s;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<CharacterPoint> charvar_points_rank(const PolyMatrix& m, int k, int N, int jobs) {
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    int size = cols - k - kFittingOffset;
    if (size <= 0) return {};  // unit ideal
    return grid_scan(cols ? (m[0][0].vars() ? m[0][0].vars() : 1) : 1, N, jobs,
                     [&](const CharacterPoint& pt) { return rank_at_point(m, pt) < size; });
}

DensePoly alexander_polynomial(const std::vector<LaurentPoly>& gens) {
    DensePoly g;
    bool first = true;
    for (const LaurentPoly& p : gens) {
        DensePoly s = specialize_diagonal(p);
        if (s.empty()) continue;
        g = first ? dense_gcd(s, s) : dense_gcd(g, s);
        first = false;
    }
    if (first) return {};  // every generator specialized to zero
    return g;
}

}  // namespace zvk
