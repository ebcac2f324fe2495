#ifndef ZVK_BRAIDS_HPP
#define ZVK_BRAIDS_HPP

#include <vector>

#include "zvk/words.hpp"

namespace zvk {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter i stands for sigma_i (1 <= i < strands), -i for its inverse.
// Letters compose left to right, as do the induced free-group actions.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands_, std::vector<int> letters_);

    bool empty() const { return letters.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Action of sigma_i (or its inverse) on the free group F_n:
// sigma_i sends g_i to g_{i+1} and g_{i+1} to g_{i+1} g_i g_{i+1}^{-1},
// fixing the other generators.
Endomorphism artin_generator(int strands, int signed_index);

Word artin_action(const BraidWord& b, const Word& w);

// a * b * a^{-1}
BraidWord conjugate(const BraidWord& a, const BraidWord& b);

BraidWord braid_multiply(const BraidWord& a, const BraidWord& b);
BraidWord braid_invert(const BraidWord& a);
BraidWord braid_power(const BraidWord& a, int n);

// Exact equality via the induced free-group automorphisms; the Artin
// representation is faithful, so this decides the braid word problem.
bool braids_equal(const BraidWord& b1, const BraidWord& b2);

// Exponent sum; invariant under conjugation.
int writhe(const BraidWord& b);

// sigma_i -> sigma_{i+offset}, strand count replaced by new_strands.
BraidWord shift(const BraidWord& b, int offset, int new_strands);

}  // namespace zvk

#endif
