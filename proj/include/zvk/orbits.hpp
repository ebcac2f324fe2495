#ifndef ZVK_ORBITS_HPP
#define ZVK_ORBITS_HPP

#include <vector>

namespace zvk {

// Partition of Z/n into orbits under e -> e + n/3 (when 3 | n) and e -> -e.
struct ExponentOrbit {
    int modulus = 1;
    std::vector<std::vector<int>> classes;  // each sorted; classes sorted by first element

    void validate() const;
};

// Torsion parameters of the nodal-cubic parametrization: the tangency
// conditions t1*t2^2 = 1 and t1^7*t2^2 = 1 force t2^12 = 1, and changing the
// base inflection point (+4 on exponents mod 12) or swapping the nodal
// branches (negation) acts on the solutions. Returns the resulting orbit
// classes of exponents mod 12.
ExponentOrbit cubic_orbit_classes();

}  // namespace zvk

#endif
