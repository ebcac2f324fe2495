#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zvk/presentation.hpp"

namespace zvk {
namespace {

bool shorter_lex(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.letters() < b.letters();
}

std::vector<Word> normalize(const std::vector<Word>& rels) {
    std::set<Word> s;
    for (const Word& r : rels) {
        Word c = canonical_relator(r);
        if (!c.empty()) s.insert(c);
    }
    std::vector<Word> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), shorter_lex);
    return out;
}

Word substitute_generator(const Word& w, int g, const Word& rep) {
    std::vector<int> out;
    const std::vector<int> repinv = invert(rep).letters();
    for (int x : w.letters()) {
        const std::vector<int>* ins = nullptr;
        if (x == g)
            ins = &rep.letters();
        else if (x == -g)
            ins = &repinv;
        if (ins) {
            for (int y : *ins) {
                if (!out.empty() && out.back() == -y)
                    out.pop_back();
                else
                    out.push_back(y);
            }
        } else {
            if (!out.empty() && out.back() == -x)
                out.pop_back();
            else
                out.push_back(x);
        }
    }
    return Word(out);
}

Word drop_index(const Word& w, int g) {
    std::vector<int> out;
    for (int x : w.letters()) {
        int a = std::abs(x);
        out.push_back(x > 0 ? (a > g ? a - 1 : a) : -(a > g ? a - 1 : a));
    }
    return Word(out);
}

// A generator occurring exactly once (exponent +-1) in r can be eliminated;
// returns its expression in the remaining generators.
std::optional<std::pair<int, Word>> elimination_candidate(const std::vector<Word>& rels) {
    for (const Word& r : rels) {
        std::map<int, int> occ;
        for (int x : r.letters()) occ[std::abs(x)]++;
        for (const auto& [g, c] : occ) {
            if (c != 1) continue;
            const std::vector<int>& v = r.letters();
            std::size_t i = 0;
            while (std::abs(v[i]) != g) ++i;
            // r = u g^eps v  =>  g^eps = u^{-1} v^{-1}
            Word u(std::vector<int>(v.begin(), v.begin() + i));
            Word tail(std::vector<int>(v.begin() + i + 1, v.end()));
            Word rep = multiply(invert(u), invert(tail));
            if (v[i] < 0) rep = invert(rep);
            return std::make_pair(g, rep);
        }
    }
    return std::nullopt;
}

// First shortening move in scan order: rewrite a substring of `r` that
// matches the longer half of a cyclic rotation of another relator.
std::optional<std::pair<std::size_t, Word>> shortening_candidate(const std::vector<Word>& rels) {
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const std::vector<int>& r = rels[ri].letters();
        for (const Word& src : rels) {
            if (src == rels[ri]) continue;
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<int> base = orient == 0 ? src.letters() : invert(src).letters();
                std::size_t L = base.size();
                for (std::size_t rot = 0; rot < L; ++rot) {
                    std::vector<int> c(base.begin() + rot, base.end());
                    c.insert(c.end(), base.begin(), base.begin() + rot);
                    for (std::size_t plen = L / 2 + 1; plen <= L && plen <= r.size(); ++plen) {
                        std::vector<int> p(c.begin(), c.begin() + plen);
                        Word q(std::vector<int>(c.begin() + plen, c.end()));
                        Word qinv = invert(q);
                        for (std::size_t pos = 0; pos + plen <= r.size(); ++pos) {
                            if (!std::equal(p.begin(), p.end(), r.begin() + pos)) continue;
                            std::vector<int> cand(r.begin(), r.begin() + pos);
                            cand.insert(cand.end(), qinv.letters().begin(), qinv.letters().end());
                            cand.insert(cand.end(), r.begin() + pos + plen, r.end());
                            Word cw = canonical_relator(Word(cand));
                            if (cw.size() < rels[ri].size())
                                return std::make_pair(ri, cw);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, long budget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    p.validate();
    int rank = p.rank;
    std::vector<std::string> names = p.names;
    std::vector<int> kept(rank);
    for (int i = 0; i < rank; ++i) kept[i] = i + 1;
    std::vector<Word> rels = normalize(p.relators);
    long steps = 0;

    while (steps < budget) {
        if (auto el = elimination_candidate(rels)) {
            auto [g, rep] = *el;
            std::vector<Word> next;
            for (const Word& r : rels) {
                Word s = substitute_generator(r, g, rep);
                if (!s.empty()) next.push_back(drop_index(s, g));
            }
            rels = normalize(next);
            kept.erase(kept.begin() + (g - 1));
            if (!names.empty()) names.erase(names.begin() + (g - 1));
            --rank;
            ++steps;
            continue;
        }
        if (auto sh = shortening_candidate(rels)) {
            auto [ri, cw] = *sh;
            rels[ri] = cw;
            rels = normalize(rels);
            ++steps;
            continue;
        }
        break;
    }

    TietzeResult res;
    res.presentation = make_presentation(rank, names, rels);
    res.kept_generators = kept;
    res.steps = steps;
    return res;
}

}  // namespace zvk
