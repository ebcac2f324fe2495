#ifndef ZVK_PRESENTATION_HPP
#define ZVK_PRESENTATION_HPP

#include <string>
#include <vector>

#include "zvk/monodromy.hpp"
#include "zvk/words.hpp"

namespace zvk {

// Finite presentation on `rank` generators. Relators are stored freely and
// cyclically reduced in a canonical form (lexicographically least among all
// cyclic rotations of the relator and of its inverse), sorted and deduplicated,
// with trivial relators dropped. Names travel with the generators so that
// meridian components survive simplification.
struct GroupPresentation {
    int rank = 0;
    std::vector<std::string> names;  // empty, or one name per generator
    std::vector<Word> relators;

    void validate() const;
};

// Canonical representative of a relator up to cyclic rotation and inversion.
Word canonical_relator(const Word& w);
Word cyclically_reduce(const Word& w);

GroupPresentation make_presentation(int rank, std::vector<std::string> names,
                                    const std::vector<Word>& raw_relators);

// Zariski-van Kampen presentation: one generator per puncture of the fiber,
// relators mu_i^{-1} * (mu_i acted on by each monodromy braid).
GroupPresentation zvk_presentation(const MonodromyPresentation& mp);

// Append the given word as an extra relator (the meridian-at-infinity
// relation that turns the affine group into the projective one).
GroupPresentation projectivize(const GroupPresentation& p, const Word& infinity_word);

struct TietzeResult {
    GroupPresentation presentation;
    std::vector<int> kept_generators;  // original 1-based indices of survivors
    long steps = 0;
};

// Deterministic greedy simplification by Tietze moves:
//  (a) eliminate a generator occurring exactly once with exponent +-1 in
//      some relator, substituting its expression everywhere;
//  (b) free + cyclic reduction, canonical form, dedup;
//  (c) shorten a relator by replacing a substring using a shorter relator
//      (both orientations, all cyclic rotations).
// Moves are applied shortest-first with lexicographic tie-breaks, so the
// output depends only on the input and the budget.
TietzeResult tietze_simplify(const GroupPresentation& p, long budget = 100000);

}  // namespace zvk

#endif
