#include "zvk/laurent.hpp"

#include <stdexcept>

namespace zvk {

LaurentPoly LaurentPoly::constant(int vars, const mpz_class& c) {
    LaurentPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, const mpz_class& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int i) {
    if (i < 1 || i > vars) throw std::out_of_range("variable index out of range");
    Exponents e(vars, 0);
    e[i - 1] = 1;
    return monomial(e);
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != vars_)
        throw std::invalid_argument("exponent vector length differs from variable count");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (vars_ == 0 && terms_.empty()) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (vars_ == 0 && terms_.empty()) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) {
            LaurentPoly::Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            p.add_term(e, c1 * c2);
        }
    return p;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e) const {
    LaurentPoly p(vars_);
    for (const auto& [e0, c] : terms_) {
        Exponents f(e0);
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += e[i];
        p.terms_.emplace(f, c);
    }
    return p;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) s += "*t" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
    return s;
}

DensePoly specialize_diagonal(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    std::map<int, mpz_class> byDeg;
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int x : e) d += x;
        byDeg[d] += c;
    }
    for (auto it = byDeg.begin(); it != byDeg.end();)
        it = it->second == 0 ? byDeg.erase(it) : std::next(it);
    if (byDeg.empty()) return {};
    int lo = byDeg.begin()->first, hi = byDeg.rbegin()->first;
    DensePoly out(hi - lo + 1, 0);
    for (const auto& [d, c] : byDeg) out[d - lo] = c;
    return out;
}

namespace {

void trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly make_primitive(DensePoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = 0;
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (mpz_class& c : p) c /= g;
    if (p.back() < 0)
        for (mpz_class& c : p) c = -c;
    return p;
}

// pseudo-remainder based Euclid over Z, valid for gcd up to rational units
DensePoly poly_mod(DensePoly a, const DensePoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class lead = a.back();
        mpz_class bl = b.back();
        std::size_t shiftd = a.size() - b.size();
        // scale a so the division is exact: a = a*bl - lead * x^shift * b
        for (mpz_class& c : a) c *= bl;
        for (std::size_t i = 0; i < b.size(); ++i) a[shiftd + i] -= lead * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

DensePoly dense_gcd(const DensePoly& a, const DensePoly& b) {
    DensePoly x = make_primitive(a), y = make_primitive(b);
    while (!y.empty()) {
        DensePoly r = make_primitive(poly_mod(x, y));
        x = y;
        y = r;
    }
    return make_primitive(x);
}

std::string dense_to_string(const DensePoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        const mpz_class& c = p[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace zvk
