#ifndef ZVK_PLANE_CURVES_HPP
#define ZVK_PLANE_CURVES_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

namespace zvk {

// Homogeneous polynomial in x, y, z with integer coefficients.
struct HomogeneousPoly {
    using Exps = std::array<int, 3>;
    std::map<Exps, mpz_class> terms;

    void add_term(const Exps& e, const mpz_class& c);
    int degree() const;
    void validate() const;

    mpz_class eval(const mpz_class& x, const mpz_class& y, const mpz_class& z) const;
    HomogeneousPoly partial(int var) const;

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
};

// True iff f and all three partials vanish at the (projective) point.
bool singular_point_check(const HomogeneousPoly& f, const std::array<long long, 3>& point);

}  // namespace zvk

#endif
