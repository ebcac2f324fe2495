#ifndef ZVK_FIXTURES_HPP
#define ZVK_FIXTURES_HPP

#include <string>
#include <vector>

#include "zvk/alexander.hpp"
#include "zvk/lattice.hpp"
#include "zvk/monodromy.hpp"
#include "zvk/plane_curves.hpp"
#include "zvk/presentation.hpp"

namespace zvk {
namespace fixtures {

// Decomposition tables of the two sextic projections (B_4: one strand per
// intersection of a fiber with the curve; the projection center is the
// tacnode of the quartic).
DecompositionTable c1_table();
DecompositionTable c2_table();

// Composed braid monodromies; component labels: meridians 1 and 4 lie on the
// quartic, 2 and 3 on the conic. c1 carries the meridian-of-infinity word
// a1 a4 a3 a2 a1 a4; for c2 the analogous word lives in a translated fiber
// basis and is carried back through the braid s1 s2 s3 s2 s1.
MonodromyPresentation c1_special();
MonodromyPresentation c2_special();

// Partial generic monodromies in B_6 (the part to the right of the chosen
// generic fiber; the remaining part is not recorded).
MonodromyPresentation generic_common();
MonodromyPresentation c2_a15_refinement();  // local refinement with twist exponent 2

// Reference two-generator presentations of the projective groups;
// generator "a" is a quartic meridian, "b" a conic meridian.
GroupPresentation g1_paper();  // < a,b | a^2 (a b)^2, [a, b^2] >
GroupPresentation g2_paper();  // < a,b | b^2 (a b)^-4 >
AbelianLabel two_generator_label();  // a -> t1, b -> t2

// Labels for four-meridian presentations of either curve (a1,a4 -> t1 on the
// quartic, a2,a3 -> t2 on the conic), and for simplified presentations via
// the surviving generator names.
AbelianLabel meridian_label();
AbelianLabel label_for_names(const std::vector<std::string>& names);

// Independent GAP-style transcriptions of the same monodromies (one braid
// per discriminant point, composed from elementary automorphisms). The c1
// version is conjugated by the common prefix recorded in gap_c1_prefix().
std::vector<BraidWord> gap_c1_braids();
std::vector<BraidWord> gap_c2_braids();
BraidWord gap_c1_prefix();

// Defining equations of the two sextics (conic, quartic and their product).
HomogeneousPoly conic1();
HomogeneousPoly quartic1();
HomogeneousPoly sextic1();
HomogeneousPoly conic2();
HomogeneousPoly quartic2();
HomogeneousPoly sextic2();

// disc(T) fixture <2> + A15 + A3 + A1 for the double cover of the first
// sextic, and the Gram matrix of the lattice spanned by the splitting
// component of the tangent line at the deep tangency point together with
// the pullback of a line and the exceptional chains for the second.
GramLattice disc_fixture();
GramLattice c2_gram();
// D_alpha = L1+ - 1/2 F + 1/8 (7 Th_{1,1} + sum_{k=2..15} (16-k) Th_{k,1})
//         + 1/4 sum_{k=1..3} (4-k) Th_{k,2}, in the c2_gram basis.
std::vector<mpq_class> c2_gram_relation_coeffs();
std::vector<int> c2_gram_t_indices();  // basis indices spanning T

}  // namespace fixtures
}  // namespace zvk

#endif
