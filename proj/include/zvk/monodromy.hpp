#ifndef ZVK_MONODROMY_HPP
#define ZVK_MONODROMY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zvk/braids.hpp"

namespace zvk {

// Braid monodromy of an affine curve: one braid per discriminant point,
// acting on the free group of a generic fiber with `strands` punctures.
// component_of labels each puncture (meridian index 1..strands) with the
// irreducible component it belongs to.
struct MonodromyPresentation {
    int strands = 2;
    std::vector<BraidWord> braids;
    std::map<int, std::string> component_of;
    std::optional<Word> infinity_word;
    std::string label;
    bool partial = false;  // only part of the monodromy is recorded

    void validate() const;
};

// One discriminant point contributes a row triple (Gamma_j, alpha_j,
// alpha_j^+); the final point may omit the alpha^+ row.
struct DecompositionTable {
    enum class RowKind { gamma, alpha, alpha_plus };
    struct Row {
        RowKind kind;
        BraidWord braid;
    };
    int strands = 2;
    std::vector<Row> rows;

    void validate() const;
};

// Braid j is beta_j * alpha_j * beta_j^{-1} where beta_j is the
// left-to-right product Gamma_1 alpha_1^+ Gamma_2 alpha_2^+ ... Gamma_j.
std::vector<BraidWord> compose_from_table(const DecompositionTable& t);

// All k in [lo, hi] for which sigma_1^{8-2k} sigma_3^{2k} sigma_2 sigma_1
// sigma_3 sigma_2 equals (sigma_1 sigma_3)^4 (sigma_2 sigma_1 sigma_3
// sigma_2) in B_4.
std::set<int> solve_deformation_exponent(int lo, int hi);

// Left side of the same equation composed from the deformation table rows
// for a given twist exponent k; used to cross-check the reduced product.
BraidWord deformation_table_product(int k);
BraidWord deformation_reduced_product(int k);
BraidWord deformation_target();

}  // namespace zvk

#endif
