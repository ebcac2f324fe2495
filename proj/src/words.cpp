#include "zvk/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace zvk {

std::vector<int> Word::freely_reduce(const std::vector<int>& raw) {
    std::vector<int> out;
    out.reserve(raw.size());
    for (int x : raw) {
        if (x == 0) throw std::invalid_argument("word letter must be nonzero");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

int Word::max_index() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, std::abs(x));
    return m;
}

Word reduce(const std::vector<int>& raw) { return Word(raw); }

Word multiply(const Word& a, const Word& b) {
    std::vector<int> cat = a.letters();
    for (int x : b.letters()) {
        if (!cat.empty() && cat.back() == -x)
            cat.pop_back();
        else
            cat.push_back(x);
    }
    Word w;
    // cat is already reduced: both inputs were reduced and we cancelled at the seam
    return Word(cat);
}

Word invert(const Word& a) {
    std::vector<int> out(a.letters().rbegin(), a.letters().rend());
    for (int& x : out) x = -x;
    return Word(out);
}

Word power(const Word& a, int n) {
    Word r;
    Word base = n < 0 ? invert(a) : a;
    for (int i = 0; i < std::abs(n); ++i) r = multiply(r, base);
    return r;
}

Endomorphism Endomorphism::identity(int arity) {
    Endomorphism e;
    e.arity = arity;
    for (int i = 1; i <= arity; ++i) e.images.push_back(Word({i}));
    return e;
}

Word substitute(const Word& w, const Endomorphism& e) {
    std::vector<int> out;
    for (int x : w.letters()) {
        int g = std::abs(x);
        if (g > e.arity)
            throw std::out_of_range("generator index " + std::to_string(g) +
                                    " exceeds endomorphism arity " + std::to_string(e.arity));
        const Word& im = e.images[g - 1];
        if (x > 0) {
            for (int y : im.letters()) {
                if (!out.empty() && out.back() == -y)
                    out.pop_back();
                else
                    out.push_back(y);
            }
        } else {
            for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
                int y = -*it;
                if (!out.empty() && out.back() == -y)
                    out.pop_back();
                else
                    out.push_back(y);
            }
        }
    }
    return Word(out);
}

std::string to_string(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters()[i]);
    }
    return s + "]";
}

}  // namespace zvk
