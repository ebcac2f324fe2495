#include "zvk/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zvk {

void ExponentOrbit::validate() const {
    std::set<int> all;
    for (const auto& cls : classes) {
        if (!std::is_sorted(cls.begin(), cls.end()))
            throw std::invalid_argument("orbit class not sorted");
        for (int e : cls) {
            if (e < 0 || e >= modulus) throw std::invalid_argument("exponent out of range");
            if (!all.insert(e).second) throw std::invalid_argument("exponent appears twice");
        }
    }
    if (static_cast<int>(all.size()) != modulus)
        throw std::invalid_argument("classes do not cover Z/n");
    for (const auto& cls : classes) {
        std::set<int> s(cls.begin(), cls.end());
        for (int e : cls) {
            if (modulus % 3 == 0 && !s.count((e + modulus / 3) % modulus))
                throw std::invalid_argument("class not closed under the +n/3 shift");
            if (!s.count(((modulus - e) % modulus)))
                throw std::invalid_argument("class not closed under negation");
        }
    }
}

ExponentOrbit cubic_orbit_classes() {
    // t1 = t2^{-2}; substituting into t1^7 t2^2 = 1 leaves t2^{-12} = 1.
    const int e1a = 1, e2a = 2;  // t1 t2^2
    const int e1b = 7, e2b = 2;  // t1^7 t2^2
    const int modulus = std::abs(e2a * e1b - e2b * e1a);  // order forced on t2
    ExponentOrbit orb;
    orb.modulus = modulus;
    std::vector<bool> used(modulus, false);
    for (int e = 0; e < modulus; ++e) {
        if (used[e]) continue;
        // close {e} under +modulus/3 and negation
        std::set<int> cls;
        std::vector<int> stack{e};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (!cls.insert(x).second) continue;
            stack.push_back((x + modulus / 3) % modulus);
            stack.push_back((modulus - x) % modulus);
        }
        for (int x : cls) used[x] = true;
        orb.classes.emplace_back(cls.begin(), cls.end());
    }
    std::sort(orb.classes.begin(), orb.classes.end());
    orb.validate();
    return orb;
}

}  // namespace zvk
