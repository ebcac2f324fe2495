#ifndef ZVK_LATTICE_HPP
#define ZVK_LATTICE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zvk {

// Integral lattice given by the Gram matrix of a fixed basis.
struct GramLattice {
    std::vector<std::vector<long long>> gram;

    int dimension() const { return static_cast<int>(gram.size()); }
    void validate() const;
};

// Chain of k (-2)-curves meeting consecutively (the A_k configuration).
GramLattice a_chain_lattice(int k);
GramLattice scalar_lattice(long long d);
GramLattice direct_sum(const std::vector<GramLattice>& ls);

// |det| of the Gram matrix.
mpz_class disc(const GramLattice& l);

enum class Obstruction { kCompatible, kObstructed };

// n-torsion in NS/T forces [NS : T] >= n, hence disc(NS) <= disc(T)/n^2.
Obstruction torsion_obstruction(const mpz_class& disc_t, const mpz_class& disc_ns, int n);

std::string to_string(Obstruction o);

// True iff v = sum coeffs_i b_i satisfies v.v = 0 and v.b = 0 for every
// basis vector b indexed by sub (exact rational arithmetic).
bool q_relation_check(const GramLattice& g, const std::vector<mpq_class>& coeffs,
                      const std::vector<int>& sub);

}  // namespace zvk

#endif
