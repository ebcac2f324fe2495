#include "zvk/braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zvk {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    for (int x : letters) {
        if (x == 0 || std::abs(x) >= strands)
            throw std::invalid_argument("braid letter " + std::to_string(x) +
                                        " out of range for " + std::to_string(strands) +
                                        " strands");
    }
}

Endomorphism artin_generator(int strands, int signed_index) {
    int i = std::abs(signed_index);
    if (i < 1 || i >= strands) throw std::out_of_range("artin generator index out of range");
    Endomorphism e = Endomorphism::identity(strands);
    if (signed_index > 0) {
        e.images[i - 1] = Word({i + 1});
        e.images[i] = Word({i + 1, i, -(i + 1)});
    } else {
        e.images[i - 1] = Word({-i, i + 1, i});
        e.images[i] = Word({i});
    }
    return e;
}

Word artin_action(const BraidWord& b, const Word& w) {
    if (w.max_index() > b.strands)
        throw std::out_of_range("word uses a generator beyond the strand count");
    Word cur = w;
    for (int s : b.letters) cur = substitute(cur, artin_generator(b.strands, s));
    return cur;
}

BraidWord braid_multiply(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    std::vector<int> cat = a.letters;
    cat.insert(cat.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.strands, std::move(cat));
}

BraidWord braid_invert(const BraidWord& a) {
    std::vector<int> out(a.letters.rbegin(), a.letters.rend());
    for (int& x : out) x = -x;
    return BraidWord(a.strands, std::move(out));
}

BraidWord braid_power(const BraidWord& a, int n) {
    BraidWord r(a.strands, {});
    BraidWord base = n < 0 ? braid_invert(a) : a;
    for (int i = 0; i < std::abs(n); ++i) r = braid_multiply(r, base);
    return r;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& b) {
    return braid_multiply(braid_multiply(a, b), braid_invert(a));
}

bool braids_equal(const BraidWord& b1, const BraidWord& b2) {
    if (b1.strands != b2.strands) throw std::invalid_argument("strand count mismatch");
    for (int j = 1; j <= b1.strands; ++j) {
        Word g({j});
        if (artin_action(b1, g) != artin_action(b2, g)) return false;
    }
    return true;
}

int writhe(const BraidWord& b) {
    int s = 0;
    for (int x : b.letters) s += x > 0 ? 1 : -1;
    return s;
}

BraidWord shift(const BraidWord& b, int offset, int new_strands) {
    std::vector<int> out;
    out.reserve(b.letters.size());
    for (int x : b.letters) {
        int i = std::abs(x) + offset;
        if (i < 1 || i >= new_strands)
            throw std::out_of_range("shifted generator index " + std::to_string(i) +
                                    " invalid in B_" + std::to_string(new_strands));
        out.push_back(x > 0 ? i : -i);
    }
    return BraidWord(new_strands, std::move(out));
}

}  // namespace zvk
