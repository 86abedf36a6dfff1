#pragma once

#include "eqk/group_algebra.hpp"

namespace eqk {

// A direct-product tower Delta x Z/p^n for n = 1..depth, with the central
// generator sigma of the cyclic factor compatible under the projections
// sigma_{n+1} -> sigma_n. Rank-0 values at level n live in the group algebra
// Q[Delta][sigma]/(sigma^{p^n} - 1) and are stored as sigma-power coefficient
// vectors over Q[Delta].
struct ProductTower {
    FiniteGroup delta;
    std::uint64_t p = 2;
    unsigned depth = 1;

    static ProductTower make(const FiniteGroup& delta, std::uint64_t p, unsigned depth);
    std::uint64_t level_order(unsigned n) const;   // p^n, levels are 1-based
};

// One value per level; sigma_coeffs[n-1] has length p^n.
using ProductValue = std::vector<GAElement>;

// project a level-(n+1) value down a level (fold sigma powers mod p^n)
ProductValue project_value(const ProductTower& tower, unsigned upper_level,
                           const ProductValue& value);

// arithmetic in Q[Delta][sigma]/(sigma^q - 1)
ProductValue cyclic_mul(const FiniteGroup& delta, const ProductValue& a,
                        const ProductValue& b);
bool value_is_zero(const ProductValue& v);

// The canonical expansion of a value in the basis {(sigma^a - 1)^i, i < q}
// (gamma_exponent = a, coprime to p), its exact division by
// (sigma^a - 1)^order, and the augmentation of the quotient. Per level:
// divisible iff the first `order` expansion coefficients vanish; the
// derivative is then the order-th coefficient, an element of Q[Delta].
struct DerivativeLevel {
    bool divisible = false;
    unsigned achieved_order = 0;       // largest k' <= order with a_0..a_{k'-1} = 0
    GAElement derivative;              // a_order, when divisible
    ProductValue quotient;             // the canonical exact quotient, when divisible
};
struct DerivativeReport {
    std::vector<DerivativeLevel> levels;
    bool all_divisible = true;
    bool stable = true;                // all level derivatives agree
};

// NotDivisible is reported per level, not thrown; NotDirectProduct and
// InvalidUnit guard the structural preconditions.
DerivativeReport finite_derivative(const ProductTower& tower,
                                   const std::vector<ProductValue>& values,
                                   std::uint64_t gamma_exponent, unsigned order);

// inflation of a base value c in Q[Delta] to the level-n algebra, times
// (sigma^a - 1)^order; used to build test families
ProductValue inflated_power_family(const ProductTower& tower, unsigned level,
                                   const GAElement& base, std::uint64_t gamma_exponent,
                                   unsigned order);

} // namespace eqk
