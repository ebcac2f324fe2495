#ifndef ZVK_CYCLOTOMIC_HPP
#define ZVK_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zvk/laurent.hpp"

namespace zvk {

// Exact point of the character torus: coordinate i is exp(2*pi*i * q[i])
// with q[i] a reduced rational in [0,1).
struct CharacterPoint {
    std::vector<mpq_class> q;

    explicit CharacterPoint(std::vector<mpq_class> q_ = {});
    int order() const;  // lcm of denominators

    friend bool operator==(const CharacterPoint&, const CharacterPoint&) = default;
    bool operator<(const CharacterPoint& o) const;

    std::string to_string() const;
};

// Element of Q[x]/Phi_N(x); the zero test is exact.
struct CyclotomicValue {
    long order = 1;
    std::vector<mpq_class> coeffs;  // size < deg Phi_N, lowest degree first

    bool is_zero() const;

    friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
    friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
    friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by the
// Phi_d for proper divisors d. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// Substitute t_i = exp(2*pi*i*q_i) into an integer Laurent polynomial and
// reduce in Q[x]/Phi_N, N = lcm of the denominators of pt.
CyclotomicValue evaluate(const LaurentPoly& poly, const CharacterPoint& pt);

bool vanishes_at(const LaurentPoly& poly, const CharacterPoint& pt);

}  // namespace zvk

#endif
