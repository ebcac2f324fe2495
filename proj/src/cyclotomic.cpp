#include "zvk/cyclotomic.hpp"

#include <map>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace zvk {

CharacterPoint::CharacterPoint(std::vector<mpq_class> q_) : q(std::move(q_)) {
    for (mpq_class& x : q) {
        x.canonicalize();
        mpz_class num = x.get_num() % x.get_den();
        if (num < 0) num += x.get_den();
        x = mpq_class(num, x.get_den());
        x.canonicalize();
    }
}

int CharacterPoint::order() const {
    mpz_class l = 1;
    for (const mpq_class& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return static_cast<int>(l.get_si());
}

bool CharacterPoint::operator<(const CharacterPoint& o) const {
    if (q.size() != o.q.size()) return q.size() < o.q.size();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] != o.q[i]) return q[i] < o.q[i];
    }
    return false;
}

std::string CharacterPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) s += ",";
        s += q[i].get_num().get_str() + "/" + q[i].get_den().get_str();
    }
    return s + ")";
}

namespace {

std::vector<mpz_class> exact_div(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size() - b.size() + 1; i-- > 0;) {
        mpz_class q = a[i + b.size() - 1] / b.back();
        out[i] = q;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q * b[j];
    }
    for (const mpz_class& c : a)
        if (c != 0) throw std::logic_error("inexact cyclotomic division");
    return out;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<mpz_class>&(long)> get = [&](long m) -> const std::vector<mpz_class>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> f(m + 1, 0);
        f[0] = -1;
        f[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) f = exact_div(std::move(f), get(d));
        return cache.emplace(m, std::move(f)).first->second;
    };
    return get(n);
}

bool CyclotomicValue::is_zero() const {
    for (const mpq_class& c : coeffs)
        if (c != 0) return false;
    return true;
}

namespace {

std::vector<mpq_class> reduce_mod_phi(std::vector<mpq_class> a, long n) {
    const std::vector<mpz_class>& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    while (a.size() > deg) {
        mpq_class lead = a.back();
        a.pop_back();
        if (lead == 0) continue;
        // phi is monic: subtract lead * x^{len-deg} * phi (without its top term)
        std::size_t base = a.size() - deg + 0;
        for (std::size_t j = 0; j < deg; ++j) a[base + j] -= lead * mpq_class(phi[j]);
    }
    a.resize(deg, mpq_class(0));
    return a;
}

CyclotomicValue promote(const CyclotomicValue& v, long n) {
    if (v.order == n) return v;
    throw std::invalid_argument("cyclotomic values of different orders");
}

}  // namespace

CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b) {
    CyclotomicValue bb = promote(b, a.order);
    CyclotomicValue r = a;
    r.coeffs.resize(std::max(a.coeffs.size(), bb.coeffs.size()), mpq_class(0));
    for (std::size_t i = 0; i < bb.coeffs.size(); ++i) r.coeffs[i] += bb.coeffs[i];
    return r;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
    CyclotomicValue bb = promote(b, a.order);
    std::vector<mpq_class> prod(a.coeffs.size() + bb.coeffs.size(), mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < bb.coeffs.size(); ++j)
            prod[i + j] += a.coeffs[i] * bb.coeffs[j];
    }
    CyclotomicValue r;
    r.order = a.order;
    r.coeffs = reduce_mod_phi(std::move(prod), a.order);
    return r;
}

CyclotomicValue evaluate(const LaurentPoly& poly, const CharacterPoint& pt) {
    if (poly.vars() != static_cast<int>(pt.q.size()) && !poly.is_zero())
        throw std::invalid_argument("point dimension differs from variable count");
    long n = pt.order();
    // t^e at the point contributes zeta^k with k = sum e_i * (q_i * N) mod N
    std::vector<mpq_class> acc(n, mpq_class(0));
    for (const auto& [e, c] : poly.terms()) {
        long k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_class mult = pt.q[i].get_num() * (n / pt.q[i].get_den());
            k += mpz_class((e[i] * mult) % n).get_si();
        }
        k = ((k % n) + n) % n;
        acc[k] += mpq_class(c);
    }
    CyclotomicValue r;
    r.order = n;
    r.coeffs = reduce_mod_phi(std::move(acc), n);
    return r;
}

bool vanishes_at(const LaurentPoly& poly, const CharacterPoint& pt) {
    return evaluate(poly, pt).is_zero();
}

}  // namespace zvk
