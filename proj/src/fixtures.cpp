#include "zvk/fixtures.hpp"

namespace zvk {
namespace fixtures {

namespace {

using RK = DecompositionTable::RowKind;

DecompositionTable::Row row(RK k, int strands, std::vector<int> letters) {
    return {k, BraidWord(strands, std::move(letters))};
}

std::vector<int> rep(int letter, int count) { return std::vector<int>(count, letter); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

DecompositionTable c1_table() {
    DecompositionTable t;
    t.strands = 4;
    t.rows = {
        row(RK::gamma, 4, {-3, 2}),      row(RK::alpha, 4, {1}),          row(RK::alpha_plus, 4, {}),
        row(RK::gamma, 4, {-2, -3, 1, -3, 1, 2}), row(RK::alpha, 4, {3}), row(RK::alpha_plus, 4, {3}),
        row(RK::gamma, 4, {-2, 1}),      row(RK::alpha, 4, {2, 2}),       row(RK::alpha_plus, 4, {2}),
        row(RK::gamma, 4, {-1, 2}),      row(RK::alpha, 4, {1}),          row(RK::alpha_plus, 4, {1}),
        row(RK::gamma, 4, {}),           row(RK::alpha, 4, rep(2, 16)),   row(RK::alpha_plus, 4, rep(2, 8)),
        row(RK::gamma, 4, {}),           row(RK::alpha, 4, {3}),
    };
    return t;
}

DecompositionTable c2_table() {
    DecompositionTable t;
    t.strands = 4;
    std::vector<int> a2 = cat({rep(0, 0)});
    a2.clear();
    for (int i = 0; i < 7; ++i) a2.insert(a2.end(), {1, 3});
    a2.insert(a2.end(), {2, 1, 3, 2});
    std::vector<int> a2p;
    for (int i = 0; i < 4; ++i) a2p.insert(a2p.end(), {1, 3});
    a2p.insert(a2p.end(), {2, 1, 3, 2});
    t.rows = {
        row(RK::gamma, 4, {-1, -3}), row(RK::alpha, 4, {2}),    row(RK::alpha_plus, 4, {}),
        row(RK::gamma, 4, {}),       row(RK::alpha, 4, a2),     row(RK::alpha_plus, 4, a2p),
        row(RK::gamma, 4, {}),       row(RK::alpha, 4, {2}),    row(RK::alpha_plus, 4, {}),
        row(RK::gamma, 4, {-1, -3}), row(RK::alpha, 4, {2, 2}),
    };
    return t;
}

namespace {

std::map<int, std::string> quartic_conic_labels() {
    return {{1, "quartic"}, {2, "conic"}, {3, "conic"}, {4, "quartic"}};
}

}  // namespace

MonodromyPresentation c1_special() {
    MonodromyPresentation mp;
    mp.strands = 4;
    mp.braids = compose_from_table(c1_table());
    mp.component_of = quartic_conic_labels();
    mp.infinity_word = Word({1, 4, 3, 2, 1, 4});
    mp.label = "c1_special";
    mp.validate();
    return mp;
}

MonodromyPresentation c2_special() {
    MonodromyPresentation mp;
    mp.strands = 4;
    mp.braids = compose_from_table(c2_table());
    mp.component_of = quartic_conic_labels();
    // The infinity meridian is a1 a4 a3 a2 a1 a4 in the fiber basis on the
    // far side of the deep tangency; carrying it through the basis change
    // s1 s2 s3 s2 s1 (inverse action) expresses it in the base fiber.
    BraidWord tau_inv(4, {-1, -2, -3, -2, -1});
    mp.infinity_word = artin_action(tau_inv, Word({1, 4, 3, 2, 1, 4}));
    mp.label = "c2_special";
    mp.validate();
    return mp;
}

MonodromyPresentation generic_common() {
    MonodromyPresentation mp;
    mp.strands = 6;
    DecompositionTable t;
    t.strands = 6;
    t.rows = {
        row(RK::gamma, 6, {}),   row(RK::alpha, 6, {1}),          row(RK::alpha_plus, 6, {}),
        row(RK::gamma, 6, {-2, -3, 1, 2}), row(RK::alpha, 6, {3}), row(RK::alpha_plus, 6, {3}),
        row(RK::gamma, 6, {}),   row(RK::alpha, 6, rep(4, 4)),    row(RK::alpha_plus, 6, rep(4, 2)),
        row(RK::gamma, 6, {}),   row(RK::alpha, 6, {5}),          row(RK::alpha_plus, 6, {}),
        row(RK::gamma, 6, {-4, 5, -3, 4, -2, 3, -1, 2}), row(RK::alpha, 6, {1}),
    };
    mp.braids = compose_from_table(t);
    // strands 2..5 are the old affine window (quartic, conic, conic,
    // quartic); the two new outer strands are the quartic branches at the
    // former projection center.
    mp.component_of = {{1, "quartic"}, {2, "quartic"}, {3, "conic"},
                       {4, "conic"},   {5, "quartic"}, {6, "quartic"}};
    mp.label = "generic_common";
    mp.partial = true;
    mp.validate();
    return mp;
}

MonodromyPresentation c2_a15_refinement() {
    MonodromyPresentation mp;
    mp.strands = 4;
    DecompositionTable t;
    t.strands = 4;
    const int k = 2;
    t.rows = {
        row(RK::gamma, 4, cat({rep(-1, 2 * k), rep(3, 2 * k), {1, 2}})),
        row(RK::alpha, 4, {1}),
        row(RK::alpha_plus, 4, {1}),
        row(RK::gamma, 4, {-2, 3}),
        row(RK::alpha, 4, {2}),
        row(RK::alpha_plus, 4, {2}),
        row(RK::gamma, 4, {}),
        row(RK::alpha, 4, rep(3, 16)),
        row(RK::alpha_plus, 4, rep(3, 8)),
    };
    mp.braids = compose_from_table(t);
    mp.component_of = quartic_conic_labels();
    mp.label = "c2_a15_refinement";
    mp.partial = true;
    mp.validate();
    return mp;
}

GroupPresentation g1_paper() {
    return make_presentation(2, {"a", "b"},
                             {Word({1, 1, 1, 2, 1, 2}), Word({1, 2, 2, -1, -2, -2})});
}

GroupPresentation g2_paper() {
    return make_presentation(2, {"a", "b"},
                             {Word({2, 2, -2, -1, -2, -1, -2, -1, -2, -1})});
}

AbelianLabel two_generator_label() {
    AbelianLabel lab;
    lab.vars = 2;
    lab.component = {1, 2};
    return lab;
}

AbelianLabel meridian_label() {
    AbelianLabel lab;
    lab.vars = 2;
    lab.component = {1, 2, 2, 1};
    return lab;
}

AbelianLabel label_for_names(const std::vector<std::string>& names) {
    AbelianLabel lab;
    lab.vars = 2;
    for (const std::string& n : names) {
        if (n == "a1" || n == "a4" || n == "a")
            lab.component.push_back(1);
        else if (n == "a2" || n == "a3" || n == "b")
            lab.component.push_back(2);
        else
            throw std::invalid_argument("no component known for generator name " + n);
    }
    return lab;
}

namespace {

// GAP-style composition: caminoN accumulates the conjugator, singN is the
// local braid; trenzaN = caminoN * singN * caminoN^{-1}.
BraidWord trenza(const std::vector<int>& camino, const std::vector<int>& sing) {
    return conjugate(BraidWord(4, camino), BraidWord(4, sing));
}

}  // namespace

BraidWord gap_c1_prefix() {
    return BraidWord(4, {-2, -1, -1, 3, 3, 2, -2, 3});
}

std::vector<BraidWord> gap_c1_braids() {
    std::vector<int> camino = gap_c1_prefix().letters;
    std::vector<BraidWord> out;
    std::vector<int> c1 = cat({camino, {-3, 2}});
    out.push_back(trenza(c1, {1}));
    std::vector<int> c2 = cat({c1, {-2, -3, -3, 1, 1, 2}});
    out.push_back(trenza(c2, {3}));
    std::vector<int> c3 = cat({c2, {3, -2, 1}});
    out.push_back(trenza(c3, {2, 2}));
    std::vector<int> c4 = cat({c3, {2, -1, 2}});
    out.push_back(trenza(c4, {1}));
    std::vector<int> c5 = cat({c4, {1}});
    out.push_back(trenza(c5, rep(2, 16)));
    std::vector<int> c6 = cat({c5, rep(2, 8)});
    out.push_back(trenza(c6, {3}));
    return out;
}

std::vector<BraidWord> gap_c2_braids() {
    std::vector<BraidWord> out;
    std::vector<int> c1 = {-3, -1};
    out.push_back(trenza(c1, {2}));
    std::vector<int> sing2;
    for (int i = 0; i < 7; ++i) sing2.insert(sing2.end(), {1, 3});
    sing2.insert(sing2.end(), {2, 1, 3, 2});
    out.push_back(trenza(c1, sing2));
    std::vector<int> c3 = c1;
    for (int i = 0; i < 4; ++i) c3.insert(c3.end(), {1, 3});
    c3.insert(c3.end(), {2, 1, 3, 2});
    out.push_back(trenza(c3, {2}));
    std::vector<int> c4 = cat({c3, {-1, -3}});
    out.push_back(trenza(c4, {2, 2}));
    return out;
}

namespace {

HomogeneousPoly poly(std::initializer_list<std::pair<std::array<int, 3>, long long>> ts) {
    HomogeneousPoly p;
    for (const auto& [e, c] : ts) p.add_term(e, mpz_class(static_cast<long>(c)));
    p.validate();
    return p;
}

}  // namespace

HomogeneousPoly conic1() {
    // 8 z^2 - 20 y z + 36 x z + 17 y^2 - 18 x y
    return poly({{{0, 0, 2}, 8}, {{0, 1, 1}, -20}, {{1, 0, 1}, 36}, {{0, 2, 0}, 17}, {{1, 1, 0}, -18}});
}

HomogeneousPoly quartic1() {
    // 8 x^2 z^2 - 16 x y^2 z + 52 x^2 y z - 36 x^3 z - 37 x^2 y^2 + 18 x^3 y - y^4 + 20 x y^3
    return poly({{{2, 0, 2}, 8},
                 {{1, 2, 1}, -16},
                 {{2, 1, 1}, 52},
                 {{3, 0, 1}, -36},
                 {{2, 2, 0}, -37},
                 {{3, 1, 0}, 18},
                 {{0, 4, 0}, -1},
                 {{1, 3, 0}, 20}});
}

HomogeneousPoly sextic1() { return conic1() * quartic1(); }

HomogeneousPoly conic2() {
    // 3 x^2 + 2 x y + 108 z^2
    return poly({{{2, 0, 0}, 3}, {{1, 1, 0}, 2}, {{0, 0, 2}, 108}});
}

HomogeneousPoly quartic2() {
    // 2 x y^3 + 3 x^2 y^2 + 108 y^2 z^2 - x^4
    return poly({{{1, 3, 0}, 2}, {{2, 2, 0}, 3}, {{0, 2, 2}, 108}, {{4, 0, 0}, -1}});
}

HomogeneousPoly sextic2() { return conic2() * quartic2(); }

GramLattice disc_fixture() {
    return direct_sum({scalar_lattice(2), a_chain_lattice(15), a_chain_lattice(3),
                       a_chain_lattice(1)});
}

GramLattice c2_gram() {
    // basis: 0 L1+, 1 F = pullback of a line, 2..16 the A15 chain,
    // 17..19 the A3 chain, 20 the node's (-2)-curve.
    GramLattice l;
    const int dim = 21;
    l.gram.assign(dim, std::vector<long long>(dim, 0));
    l.gram[0][0] = -2;
    l.gram[1][1] = 2;
    l.gram[0][1] = l.gram[1][0] = 1;
    for (int k = 0; k < 15; ++k) {
        l.gram[2 + k][2 + k] = -2;
        if (k + 1 < 15) l.gram[2 + k][3 + k] = l.gram[3 + k][2 + k] = 1;
    }
    for (int k = 0; k < 3; ++k) {
        l.gram[17 + k][17 + k] = -2;
        if (k + 1 < 3) l.gram[17 + k][18 + k] = l.gram[18 + k][17 + k] = 1;
    }
    l.gram[20][20] = -2;
    // the tangent-line component meets the second curve of the deep chain
    // and the first curve of the tacnode chain
    l.gram[0][3] = l.gram[3][0] = 1;
    l.gram[0][17] = l.gram[17][0] = 1;
    return l;
}

std::vector<mpq_class> c2_gram_relation_coeffs() {
    std::vector<mpq_class> v(21, 0);
    v[0] = 1;
    v[1] = mpq_class(-1, 2);
    v[2] = mpq_class(7, 8);
    for (int k = 2; k <= 15; ++k) v[1 + k] = mpq_class(16 - k, 8);
    for (int k = 1; k <= 3; ++k) v[16 + k] = mpq_class(4 - k, 4);
    return v;
}

std::vector<int> c2_gram_t_indices() {
    std::vector<int> idx;
    for (int i = 1; i <= 20; ++i) idx.push_back(i);
    return idx;
}

}  // namespace fixtures
}  // namespace zvk
