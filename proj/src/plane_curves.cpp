#include "zvk/plane_curves.hpp"

#include <stdexcept>

namespace zvk {

void HomogeneousPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

int HomogeneousPoly::degree() const {
    if (terms.empty()) return 0;
    const Exps& e = terms.begin()->first;
    return e[0] + e[1] + e[2];
}

void HomogeneousPoly::validate() const {
    int d = degree();
    for (const auto& [e, c] : terms)
        if (e[0] + e[1] + e[2] != d) throw std::invalid_argument("polynomial not homogeneous");
}

mpz_class HomogeneousPoly::eval(const mpz_class& x, const mpz_class& y, const mpz_class& z) const {
    auto pw = [](const mpz_class& b, int e) {
        mpz_class r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    mpz_class acc = 0;
    for (const auto& [e, c] : terms) acc += c * pw(x, e[0]) * pw(y, e[1]) * pw(z, e[2]);
    return acc;
}

HomogeneousPoly HomogeneousPoly::partial(int var) const {
    HomogeneousPoly out;
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        Exps f = e;
        f[var] -= 1;
        out.add_term(f, c * e[var]);
    }
    return out;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly out;
    for (const auto& [e1, c1] : a.terms)
        for (const auto& [e2, c2] : b.terms)
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

bool singular_point_check(const HomogeneousPoly& f, const std::array<long long, 3>& point) {
    if (point[0] == 0 && point[1] == 0 && point[2] == 0)
        throw std::invalid_argument("projective point cannot be the zero triple");
    f.validate();
    mpz_class x(static_cast<long>(point[0])), y(static_cast<long>(point[1])), z(static_cast<long>(point[2]));
    if (f.eval(x, y, z) != 0) return false;
    for (int v = 0; v < 3; ++v)
        if (f.partial(v).eval(x, y, z) != 0) return false;
    return true;
}

}  // namespace zvk
