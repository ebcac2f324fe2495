#ifndef ZVK_ALEXANDER_HPP
#define ZVK_ALEXANDER_HPP

#include <vector>

#include "zvk/cyclotomic.hpp"
#include "zvk/laurent.hpp"
#include "zvk/presentation.hpp"

namespace zvk {

// Sends each generator to a standard basis vector of Z^r (the exponent
// lattice of the component torus): a meridian of component c maps to e_c.
struct AbelianLabel {
    int vars = 0;
    std::vector<int> component;  // component[i-1] in 1..vars for generator i

    void validate(int rank) const;
    LaurentPoly::Exponents vec(int generator) const;
};

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Abelianized Fox derivative d(w)/d(x_j) followed by the label map.
LaurentPoly fox_derivative_abelianized(const Word& w, int j, const AbelianLabel& lab);

// Total label-exponent vector of a word.
LaurentPoly::Exponents label_exponent(const Word& w, const AbelianLabel& lab);

// Fox matrix of the presentation: entry (i,j) = d(relator_i)/d(x_j),
// abelianized. Dimensions relators x rank.
PolyMatrix alexander_matrix(const GroupPresentation& p, const AbelianLabel& lab);

// Relators whose label-exponent vector is nonzero cannot survive in any
// quotient carrying the Z^r grading; they are replaced by the commutators
// [r, x_u] for every generator x_u, which present the same group with the
// offending element made central. Label-compatible relators are kept.
// This realizes the affine group associated with a transversal line at
// infinity, which is the group the torsion-point scan speaks about.
GroupPresentation centralize_incompatible_relators(const GroupPresentation& p,
                                                   const AbelianLabel& lab);

// Generators of the k-th Fitting ideal: all minors of size (rank - k).
// Size 0 yields the unit ideal; an impossible size yields the zero ideal.
// The index convention is calibrated so that k = 1 on the matrix of the
// two-generator quartic/conic reference presentation cuts out exactly the
// trivial character; see tests/test_alexander.cpp.
std::vector<LaurentPoly> fitting_ideal(const PolyMatrix& m, int k);

// Calibrated convention, recorded in every run report: minors of size
// (rank - k - fitting_offset) generate F_k; the calibration fixes it to 0.
inline constexpr int kFittingOffset = 0;

// All torsion points of order dividing N at which every generator vanishes.
std::vector<CharacterPoint> charvar_points(const std::vector<LaurentPoly>& gens, int vars,
                                           int N, int jobs = 1);

// Same locus as charvar_points(fitting_ideal(m, k), ...) but computed by
// evaluating the matrix at each grid point and rank-testing over Q(zeta);
// avoids expanding large symbolic minors.
std::vector<CharacterPoint> charvar_points_rank(const PolyMatrix& m, int k, int N,
                                                int jobs = 1);

int rank_at_point(const PolyMatrix& m, const CharacterPoint& pt);

// Specialize every t_i to t, take the gcd over Q[t] of the generators and
// normalize: primitive integer coefficients, positive leading coefficient,
// lowest term of degree 0.
DensePoly alexander_polynomial(const std::vector<LaurentPoly>& gens);

}  // namespace zvk

#endif
