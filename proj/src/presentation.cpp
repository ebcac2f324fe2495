#include "zvk/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zvk {

void GroupPresentation::validate() const {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (!names.empty() && static_cast<int>(names.size()) != rank)
        throw std::invalid_argument("names count differs from rank");
    for (const Word& r : relators) {
        if (r.empty()) throw std::invalid_argument("trivial relator stored");
        if (r.max_index() > rank)
            throw std::invalid_argument("relator uses a generator beyond the rank");
    }
}

Word cyclically_reduce(const Word& w) {
    std::vector<int> v = w.letters();
    while (v.size() >= 2 && v.front() == -v.back()) {
        v.erase(v.begin());
        v.pop_back();
    }
    return Word(v);
}

Word canonical_relator(const Word& w) {
    Word c = cyclically_reduce(w);
    if (c.empty()) return c;
    const std::vector<int> u = c.letters();
    std::vector<int> best;
    for (int orient = 0; orient < 2; ++orient) {
        std::vector<int> base = orient == 0 ? u : invert(c).letters();
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::vector<int> rot(base.begin() + i, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + i);
            if (best.empty() || rot < best) best = rot;
        }
    }
    return Word(best);
}

GroupPresentation make_presentation(int rank, std::vector<std::string> names,
                                    const std::vector<Word>& raw_relators) {
    std::set<Word> rels;
    for (const Word& r : raw_relators) {
        Word c = canonical_relator(r);
        if (!c.empty()) rels.insert(c);
    }
    GroupPresentation p;
    p.rank = rank;
    p.names = std::move(names);
    p.relators.assign(rels.begin(), rels.end());
    std::sort(p.relators.begin(), p.relators.end(),
              [](const Word& a, const Word& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a.letters() < b.letters();
              });
    p.validate();
    return p;
}

GroupPresentation zvk_presentation(const MonodromyPresentation& mp) {
    mp.validate();
    std::vector<Word> rels;
    for (const BraidWord& b : mp.braids) {
        for (int i = 1; i <= mp.strands; ++i) {
            Word mu({i});
            rels.push_back(multiply(invert(mu), artin_action(b, mu)));
        }
    }
    std::vector<std::string> names;
    for (int i = 1; i <= mp.strands; ++i) names.push_back("a" + std::to_string(i));
    return make_presentation(mp.strands, std::move(names), rels);
}

GroupPresentation projectivize(const GroupPresentation& p, const Word& infinity_word) {
    if (infinity_word.max_index() > p.rank)
        throw std::out_of_range("infinity word uses a generator beyond the rank");
    std::vector<Word> rels = p.relators;
    rels.push_back(infinity_word);
    return make_presentation(p.rank, p.names, rels);
}

}  // namespace zvk
