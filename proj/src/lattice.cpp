#include "zvk/lattice.hpp"

#include <stdexcept>

#include "zvk/snf.hpp"

namespace zvk {

void GramLattice::validate() const {
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (gram[i].size() != gram.size()) throw std::invalid_argument("Gram matrix not square");
        for (std::size_t j = 0; j < gram.size(); ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
    }
}

GramLattice a_chain_lattice(int k) {
    if (k < 1) throw std::invalid_argument("chain length must be positive");
    GramLattice l;
    l.gram.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        l.gram[i][i] = -2;
        if (i + 1 < k) l.gram[i][i + 1] = l.gram[i + 1][i] = 1;
    }
    return l;
}

GramLattice scalar_lattice(long long d) {
    GramLattice l;
    l.gram = {{d}};
    return l;
}

GramLattice direct_sum(const std::vector<GramLattice>& ls) {
    int dim = 0;
    for (const GramLattice& l : ls) dim += l.dimension();
    GramLattice out;
    out.gram.assign(dim, std::vector<long long>(dim, 0));
    int off = 0;
    for (const GramLattice& l : ls) {
        int d = l.dimension();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out.gram[off + i][off + j] = l.gram[i][j];
        off += d;
    }
    return out;
}

mpz_class disc(const GramLattice& l) {
    l.validate();
    IntMatrix m;
    for (const auto& row : l.gram) {
        std::vector<mpz_class> r;
        for (long long v : row) r.emplace_back(static_cast<long>(v));
        m.push_back(std::move(r));
    }
    return abs(integer_determinant(m));
}

Obstruction torsion_obstruction(const mpz_class& disc_t, const mpz_class& disc_ns, int n) {
    if (disc_t <= 0 || disc_ns <= 0 || n <= 0)
        throw std::invalid_argument("discriminants and torsion order must be positive");
    // disc_ns <= disc_t / n^2, kept in integers
    return disc_ns * n * n <= disc_t ? Obstruction::kCompatible : Obstruction::kObstructed;
}

std::string to_string(Obstruction o) {
    return o == Obstruction::kCompatible ? "COMPATIBLE" : "OBSTRUCTED";
}

bool q_relation_check(const GramLattice& g, const std::vector<mpq_class>& coeffs,
                      const std::vector<int>& sub) {
    g.validate();
    int n = g.dimension();
    if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("coefficient vector length differs from lattice dimension");
    // w = G * v
    std::vector<mpq_class> w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] += mpq_class(static_cast<long>(g.gram[i][j])) * coeffs[j];
    mpq_class vv = 0;
    for (int i = 0; i < n; ++i) vv += coeffs[i] * w[i];
    if (vv != 0) return false;
    for (int b : sub) {
        if (b < 0 || b >= n) throw std::out_of_range("basis index out of range");
        if (w[b] != 0) return false;
    }
    return true;
}

}  // namespace zvk
