#ifndef ZVK_LAURENT_HPP
#define ZVK_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace zvk {

// Multivariate Laurent polynomial with integer coefficients; terms are kept
// in a map keyed by exponent vector, so the representation is canonical and
// zero coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int vars) : vars_(vars) {}

    static LaurentPoly constant(int vars, const mpz_class& c);
    static LaurentPoly monomial(Exponents e, const mpz_class& c = 1);
    static LaurentPoly variable(int vars, int i);  // t_i, 1-based

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    void add_term(const Exponents& e, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // multiply by the monomial t^e (shift every exponent vector)
    LaurentPoly shifted(const Exponents& e) const;

    std::string to_string() const;

private:
    int vars_ = 0;
    std::map<Exponents, mpz_class> terms_;
};

// Dense one-variable integer polynomial, lowest degree first.
using DensePoly = std::vector<mpz_class>;

// Specialize every t_i to a single t and collect by total exponent; the
// result is normalized so the lowest term has degree 0.
DensePoly specialize_diagonal(const LaurentPoly& p);

// gcd over Q[t], returned primitive over Z with positive leading coefficient.
DensePoly dense_gcd(const DensePoly& a, const DensePoly& b);

std::string dense_to_string(const DensePoly& p);

}  // namespace zvk

#endif
