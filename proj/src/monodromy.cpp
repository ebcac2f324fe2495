#include "zvk/monodromy.hpp"

#include <stdexcept>

namespace zvk {

void MonodromyPresentation::validate() const {
    if (strands < 2) throw std::invalid_argument("monodromy needs at least 2 strands");
    for (const BraidWord& b : braids)
        if (b.strands != strands)
            throw std::invalid_argument("braid strand count differs from monodromy strand count");
    for (int i = 1; i <= strands; ++i)
        if (!component_of.count(i))
            throw std::invalid_argument("component_of misses meridian " + std::to_string(i));
    if (infinity_word && infinity_word->max_index() > strands)
        throw std::invalid_argument("infinity word uses a meridian beyond the strand count");
}

void DecompositionTable::validate() const {
    // expected pattern: (gamma alpha alpha_plus)* gamma alpha [alpha_plus]
    if (rows.empty()) throw std::invalid_argument("empty decomposition table");
    std::size_t i = 0;
    while (i < rows.size()) {
        if (rows[i].kind != RowKind::gamma)
            throw std::invalid_argument("row " + std::to_string(i) + ": expected Gamma row");
        if (i + 1 >= rows.size() || rows[i + 1].kind != RowKind::alpha)
            throw std::invalid_argument("row " + std::to_string(i + 1) + ": expected alpha row");
        i += 2;
        if (i < rows.size()) {
            if (rows[i].kind != RowKind::alpha_plus)
                throw std::invalid_argument("row " + std::to_string(i) +
                                            ": expected alpha^+ row");
            ++i;
        }
    }
    for (const Row& r : rows)
        if (r.braid.strands != strands)
            throw std::invalid_argument("table row strand count mismatch");
}

std::vector<BraidWord> compose_from_table(const DecompositionTable& t) {
    t.validate();
    std::vector<BraidWord> out;
    BraidWord beta(t.strands, {});
    std::size_t i = 0;
    while (i < t.rows.size()) {
        beta = braid_multiply(beta, t.rows[i].braid);  // Gamma_j
        const BraidWord& alpha = t.rows[i + 1].braid;
        out.push_back(conjugate(beta, alpha));
        i += 2;
        if (i < t.rows.size()) {
            beta = braid_multiply(beta, t.rows[i].braid);  // alpha_j^+
            ++i;
        }
    }
    return out;
}

BraidWord deformation_table_product(int k) {
    // Gamma_2a alpha_2a^+ Gamma_2b alpha_2b^+ Gamma_2c alpha_2c^+ with
    // Gamma_2a = sigma_1^{-2k} sigma_3^{2k} sigma_1 sigma_2.
    std::vector<int> w;
    for (int i = 0; i < 2 * k; ++i) w.push_back(-1);
    for (int i = 0; i < 2 * k; ++i) w.push_back(3);
    w.insert(w.end(), {1, 2});
    w.push_back(1);        // alpha_2a^+
    w.insert(w.end(), {-2, 3});  // Gamma_2b
    w.push_back(2);        // alpha_2b^+
    for (int i = 0; i < 8; ++i) w.push_back(3);  // alpha_2c^+ (Gamma_2c empty)
    return BraidWord(4, w);
}

BraidWord deformation_reduced_product(int k) {
    std::vector<int> w;
    int e = 8 - 2 * k;
    for (int i = 0; i < std::abs(e); ++i) w.push_back(e > 0 ? 1 : -1);
    for (int i = 0; i < 2 * k; ++i) w.push_back(3);
    w.insert(w.end(), {2, 1, 3, 2});
    return BraidWord(4, w);
}

BraidWord deformation_target() {
    std::vector<int> w;
    for (int i = 0; i < 4; ++i) w.insert(w.end(), {1, 3});
    w.insert(w.end(), {2, 1, 3, 2});
    return BraidWord(4, w);
}

std::set<int> solve_deformation_exponent(int lo, int hi) {
    if (lo < 0 || hi > 8 || lo > hi) throw std::out_of_range("k range must lie within 0..8");
    std::set<int> sols;
    BraidWord target = deformation_target();
    for (int k = lo; k <= hi; ++k)
        if (braids_equal(deformation_reduced_product(k), target)) sols.insert(k);
    return sols;
}

}  // namespace zvk
