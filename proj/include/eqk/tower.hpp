#pragma once

#include "eqk/lseries.hpp"

namespace eqk {

// A tower of abelian fields over the rationals, given by nested conductors
// f_0 | f_1 | ... with per-level truncation sets S(F_i) = {p | f_i} plus any
// declared extras (validated to be nested) and one shared modification set T.
struct CyclotomicTower {
    struct Level {
        CyclotomicData data;
        std::vector<std::uint64_t> s_primes;
    };
    std::vector<Level> levels;
    std::vector<std::uint64_t> t_primes;

    static CyclotomicTower build(const std::vector<std::uint64_t>& conductors,
                                 const std::vector<std::vector<std::uint64_t>>& extra_s,
                                 const std::vector<std::uint64_t>& t_primes);

    // the projection G_upper -> G_lower (residue reduction)
    GroupHom projection(unsigned upper, unsigned lower) const;
};

// The rank-0 system: one Stickelberger element per level.
struct PreEulerSystem0 {
    const CyclotomicTower* tower = nullptr;
    std::vector<StickelbergerElement> values;
};

PreEulerSystem0 stickelberger_system(const CyclotomicTower& tower);

// Exact verification of the norm-compatibility relation for every comparable
// pair of levels: the projection of the upper value equals the lower value
// multiplied by the Euler factors (1 - Fr_v^{-1}) over the new places.
struct DistributionReport {
    struct PairCheck {
        unsigned upper = 0, lower = 0;
        bool ok = false;
        GAElement residual;        // zero exactly when ok
    };
    std::vector<PairCheck> pairs;
    bool all_ok = true;
};

DistributionReport verify_distribution(const CyclotomicTower& tower,
                                       const std::vector<GAElement>& values);
inline DistributionReport verify_distribution(const PreEulerSystem0& sys) {
    std::vector<GAElement> coeffs;
    for (const auto& v : sys.values) coeffs.push_back(v.coefficients);
    return verify_distribution(*sys.tower, coeffs);
}
// Throwing variant: RelationViolation names the first failing pair.
void require_distribution(const CyclotomicTower& tower, const std::vector<GAElement>& values);

} // namespace eqk
