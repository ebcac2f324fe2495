#ifndef ZVK_SNF_HPP
#define ZVK_SNF_HPP

#include <gmpxx.h>

#include <vector>

#include "zvk/presentation.hpp"

namespace zvk {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Invariant factors d_1 | d_2 | ... of the cokernel, split into free rank
// and the torsion part (factors >= 2).
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Diagonal of the Smith normal form (nonnegative, divisibility chain).
std::vector<mpz_class> smith_diagonal(IntMatrix m);

// Cokernel of the matrix acting on Z^cols.
AbelianInvariants cokernel_invariants(const IntMatrix& m, int cols);

// Relator exponent matrix (relators x generators) of a presentation.
IntMatrix exponent_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

mpz_class integer_determinant(const IntMatrix& m);

}  // namespace zvk

#endif
