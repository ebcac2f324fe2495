#include <doctest.h>

#include <set>

#include "zvk/alexander.hpp"
#include "zvk/fixtures.hpp"
#include "zvk/presentation.hpp"

using namespace zvk;

TEST_CASE("relator canonical form identifies rotations and inverses") {
    Word w({-1, 2, 1, -2});
    CHECK(canonical_relator(w).letters() == std::vector<int>{-2, -1, 2, 1});
    CHECK(canonical_relator(invert(w)) == canonical_relator(w));
    Word rot({1, -2, -1, 2});
    CHECK(canonical_relator(rot) == canonical_relator(w));
    CHECK(canonical_relator(Word({1, 2, -2, -1})).empty());
    CHECK(cyclically_reduce(Word({1, 2, 3, -2, -1})).letters() == std::vector<int>{3});
}

TEST_CASE("zvk relators of a squared generator braid") {
    MonodromyPresentation mp;
    mp.strands = 2;
    mp.braids = {BraidWord(2, {1, 1})};
    mp.component_of = {{1, "c"}, {2, "c"}};
    GroupPresentation p = zvk_presentation(mp);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].letters() == std::vector<int>{-2, -1, 2, 1});
    CHECK(p.rank == 2);
}

TEST_CASE("zvk relators of a single positive crossing identify the meridians") {
    MonodromyPresentation mp;
    mp.strands = 2;
    mp.braids = {BraidWord(2, {1})};
    mp.component_of = {{1, "c"}, {2, "c"}};
    GroupPresentation p = zvk_presentation(mp);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].letters() == std::vector<int>{-2, 1});
}

TEST_CASE("zvk with no braids is free") {
    MonodromyPresentation mp;
    mp.strands = 4;
    mp.component_of = {{1, "q"}, {2, "c"}, {3, "c"}, {4, "q"}};
    GroupPresentation p = zvk_presentation(mp);
    CHECK(p.rank == 4);
    CHECK(p.relators.empty());
}

TEST_CASE("projectivize appends the infinity relator") {
    GroupPresentation p = make_presentation(4, {}, {Word({1, -2})});
    GroupPresentation q = projectivize(p, Word({1, 4, 3, 2, 1, 4}));
    CHECK(q.relators.size() == p.relators.size() + 1);

    CHECK(projectivize(p, Word()).relators == p.relators);
    CHECK_THROWS_AS(projectivize(p, Word({5})), std::out_of_range);
}

TEST_CASE("zvk relators lie in the kernel of the component abelianization") {
    for (const MonodromyPresentation& mp : {fixtures::c1_special(), fixtures::c2_special()}) {
        GroupPresentation p = zvk_presentation(mp);
        AbelianLabel lab = fixtures::meridian_label();
        for (const Word& r : p.relators)
            CHECK(label_exponent(r, lab) == LaurentPoly::Exponents{0, 0});
    }
}

TEST_CASE("tietze eliminates a redundant generator") {
    GroupPresentation p = make_presentation(2, {"a", "b"}, {Word({1, -2})});
    TietzeResult r = tietze_simplify(p);
    CHECK(r.presentation.rank == 1);
    CHECK(r.presentation.relators.empty());
    CHECK(r.kept_generators.size() == 1);
}

TEST_CASE("tietze fixed point on a free presentation") {
    GroupPresentation p = make_presentation(1, {"a"}, {});
    TietzeResult r = tietze_simplify(p);
    CHECK(r.presentation.rank == 1);
    CHECK(r.presentation.relators.empty());
    CHECK(r.steps == 0);
}

TEST_CASE("tietze rejects a non-positive budget") {
    CHECK_THROWS_AS(tietze_simplify(make_presentation(1, {}, {}), 0), std::invalid_argument);
}

TEST_CASE("pipeline presentations collapse to two generators") {
    MonodromyPresentation c1 = fixtures::c1_special();
    GroupPresentation p1 = projectivize(zvk_presentation(c1), *c1.infinity_word);
    TietzeResult r1 = tietze_simplify(p1);
    CHECK(r1.presentation.rank <= 2);

    MonodromyPresentation c2 = fixtures::c2_special();
    GroupPresentation p2 = projectivize(zvk_presentation(c2), *c2.infinity_word);
    TietzeResult r2 = tietze_simplify(p2);
    CHECK(r2.presentation.rank <= 2);

    // survivors keep their meridian names, one per component
    auto comps = [](const TietzeResult& r) {
        std::multiset<int> c;
        for (const std::string& n : r.presentation.names)
            c.insert(n == "a1" || n == "a4" ? 1 : 2);
        return c;
    };
    CHECK(comps(r1) == std::multiset<int>{1, 2});
    CHECK(comps(r2) == std::multiset<int>{1, 2});
}

TEST_CASE("tietze output is deterministic") {
    MonodromyPresentation c1 = fixtures::c1_special();
    GroupPresentation p = projectivize(zvk_presentation(c1), *c1.infinity_word);
    TietzeResult a = tietze_simplify(p);
    TietzeResult b = tietze_simplify(p);
    CHECK(a.presentation.rank == b.presentation.rank);
    CHECK(a.presentation.relators == b.presentation.relators);
    CHECK(a.kept_generators == b.kept_generators);
    CHECK(a.steps == b.steps);
}

TEST_CASE("tietze respects the step budget") {
    MonodromyPresentation c1 = fixtures::c1_special();
    GroupPresentation p = projectivize(zvk_presentation(c1), *c1.infinity_word);
    TietzeResult r = tietze_simplify(p, 3);
    CHECK(r.steps <= 3);
}
