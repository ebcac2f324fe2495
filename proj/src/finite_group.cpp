#include "zvk/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace zvk {

FiniteGroup::FiniteGroup(std::string label_, std::vector<std::vector<int>> table_)
    : label(std::move(label_)), table(std::move(table_)) {
    int n = order();
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("Cayley table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("Cayley table has no identity");
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0) throw std::invalid_argument("Cayley table element has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("Cayley table is not associative");
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup("C" + std::to_string(n), std::move(t));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    // element r^i s^e at index i + n*e
    std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int k = ((e == 0 ? i + j : i - j) % n + n) % n;
                    t[i + n * e][j + n * f] = k + n * ((e + f) % 2);
                }
    return FiniteGroup("D" + std::to_string(2 * n), std::move(t));
}

FiniteGroup symmetric_group(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index[c];
        }
    return FiniteGroup("S" + std::to_string(n), std::move(t));
}

FiniteGroup quaternion_group() {
    // index = 2*unit + sign, units 1,i,j,k, sign 0:+ 1:-
    auto mul_units = [](int u, int v, int& sgn) -> int {
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sgn = sign[u][v];
        return prod[u][v];
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int s1 = a % 2 ? -1 : 1, u1 = a / 2;
            int s2 = b % 2 ? -1 : 1, u2 = b / 2;
            int s3;
            int u3 = mul_units(u1, u2, s3);
            int s = s1 * s2 * s3;
            t[a][b] = 2 * u3 + (s > 0 ? 0 : 1);
        }
    return FiniteGroup("Q8", std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int oa = a.order(), ob = b.order();
    std::vector<std::vector<int>> t(oa * ob, std::vector<int>(oa * ob));
    auto idx = [ob](int x, int y) { return x * ob + y; };
    for (int x1 = 0; x1 < oa; ++x1)
        for (int y1 = 0; y1 < ob; ++y1)
            for (int x2 = 0; x2 < oa; ++x2)
                for (int y2 = 0; y2 < ob; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(a.label + "x" + b.label, std::move(t));
}

std::vector<FiniteGroup> catalog(int max_order) {
    if (max_order < 1 || max_order > 64)
        throw std::invalid_argument("catalog supports max_order in 1..64");
    std::vector<FiniteGroup> base;
    for (int n = 1; n <= max_order; ++n) base.push_back(cyclic_group(n));
    for (int n = 2; 2 * n <= max_order; ++n) base.push_back(dihedral_group(n));
    if (max_order >= 6) base.push_back(symmetric_group(3));
    if (max_order >= 24) base.push_back(symmetric_group(4));
    if (max_order >= 8) base.push_back(quaternion_group());

    // close under binary products, dropping label duplicates
    std::vector<FiniteGroup> out = base;
    std::map<std::string, bool> seen;
    auto canon_label = [](const FiniteGroup& g) {
        return std::to_string(g.order()) + "|" + g.label;
    };
    for (const FiniteGroup& g : out) seen[canon_label(g)] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t cur = out.size();
        for (std::size_t i = 0; i < cur; ++i)
            for (std::size_t j = i; j < cur; ++j) {
                if (out[i].order() < 2 || out[j].order() < 2) continue;
                if (out[i].order() * out[j].order() > max_order) continue;
                // keep factor labels sorted so CxD and DxC collapse
                const FiniteGroup& a = out[i].label <= out[j].label ? out[i] : out[j];
                const FiniteGroup& b = out[i].label <= out[j].label ? out[j] : out[i];
                FiniteGroup p = direct_product(a, b);
                if (seen.count(canon_label(p))) continue;
                seen[canon_label(p)] = true;
                out.push_back(std::move(p));
                grew = true;
            }
    }
    std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.label < b.label;
    });
    return out;
}

std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& q, int jobs) {
    p.validate();
    int n = p.rank;
    int o = q.order();
    if (n == 0) return 1;

    // order relators shortest first for early pruning
    GroupPresentation ps = p;
    std::sort(ps.relators.begin(), ps.relators.end(),
              [](const Word& a, const Word& b) { return a.size() < b.size(); });

    auto count_simple = [&](int lo, int hi) {
        std::vector<int> img(n, 0);
        std::uint64_t cnt = 0;
        std::vector<const std::vector<int>*> rels;
        for (const Word& r : ps.relators) rels.push_back(&r.letters());
        for (int first = lo; first < hi; ++first) {
            img[0] = first;
            std::fill(img.begin() + 1, img.end(), 0);
            while (true) {
                bool ok = true;
                for (const auto* r : rels) {
                    int v = q.identity;
                    for (int x : *r) {
                        int g = img[std::abs(x) - 1];
                        v = q.mul(v, x > 0 ? g : q.inverse[g]);
                    }
                    if (v != q.identity) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++cnt;
                int d = n - 1;
                while (d >= 1 && img[d] == o - 1) {
                    img[d] = 0;
                    --d;
                }
                if (d < 1) break;
                ++img[d];
            }
        }
        return cnt;
    };

    if (jobs <= 1 || o < jobs) return count_simple(0, o);

    std::vector<std::uint64_t> parts(jobs, 0);
    std::vector<std::thread> threads;
    int chunk = (o + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        int lo = t * chunk, hi = std::min(o, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, t, lo, hi] { parts[t] = count_simple(lo, hi); });
    }
    for (auto& th : threads) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t v : parts) total += v;
    return total;
}

}  // namespace zvk
