#ifndef ZVK_FINITE_GROUP_HPP
#define ZVK_FINITE_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zvk/presentation.hpp"

namespace zvk {

// A finite group as a Cayley table of element indices. The group axioms
// are verified on construction.
struct FiniteGroup {
    std::string label;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;

    FiniteGroup(std::string label_, std::vector<std::vector<int>> table_);

    int order() const { return static_cast<int>(table.size()); }
    int mul(int a, int b) const { return table[a][b]; }
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup symmetric_group(int n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Cyclic groups, dihedral groups, S3/S4, Q8 and direct products of catalog
// members, all of order <= max_order. No isomorphism dedup is attempted.
std::vector<FiniteGroup> catalog(int max_order);

// Number of homomorphisms p -> q (tuples of generator images satisfying all
// relators). Brute force over q^rank with early relator pruning; `jobs`
// partitions the outermost image loop.
std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& q, int jobs = 1);

}  // namespace zvk

#endif
