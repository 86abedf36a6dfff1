#include "eqk/tower.hpp"

#include <algorithm>

namespace eqk {

CyclotomicTower CyclotomicTower::build(const std::vector<std::uint64_t>& conductors,
                                       const std::vector<std::vector<std::uint64_t>>& extra_s,
                                       const std::vector<std::uint64_t>& t_primes) {
    require(!conductors.empty(), "BadInput", "tower needs at least one level");
    require(extra_s.empty() || extra_s.size() == conductors.size(), "BadInput",
            "one extra-S list per level (or none)");
    CyclotomicTower tower;
    tower.t_primes = t_primes;
    for (std::size_t i = 0; i < conductors.size(); ++i) {
        if (i > 0)
            require(conductors[i] % conductors[i - 1] == 0, "BadInput",
                    "conductors must be nested");
        Level lvl;
        lvl.data = CyclotomicData::build(conductors[i]);
        for (auto [p, e] : factorize(conductors[i])) lvl.s_primes.push_back(p);
        if (!extra_s.empty())
            for (auto p : extra_s[i])
                if (std::find(lvl.s_primes.begin(), lvl.s_primes.end(), p) ==
                    lvl.s_primes.end())
                    lvl.s_primes.push_back(p);
        std::sort(lvl.s_primes.begin(), lvl.s_primes.end());
        for (auto q : t_primes) {
            require(conductors[i] % q != 0, "BadInput", "T meets the ramified primes");
            require(std::find(lvl.s_primes.begin(), lvl.s_primes.end(), q) ==
                        lvl.s_primes.end(),
                    "SetOverlap", "T meets S");
        }
        tower.levels.push_back(std::move(lvl));
    }
    // S must be nested along the tower
    for (std::size_t i = 1; i < tower.levels.size(); ++i)
        for (auto p : tower.levels[i - 1].s_primes)
            require(std::find(tower.levels[i].s_primes.begin(),
                              tower.levels[i].s_primes.end(),
                              p) != tower.levels[i].s_primes.end(),
                    "BadInput", "S sets must grow along the tower");
    return tower;
}

GroupHom CyclotomicTower::projection(unsigned upper, unsigned lower) const {
    require(lower <= upper && upper < levels.size(), "BadInput", "bad level indices");
    const auto& up = levels[upper].data;
    const auto& lo = levels[lower].data;
    std::vector<unsigned> images(up.group.order());
    for (unsigned i = 0; i < up.group.order(); ++i)
        images[i] = lo.element_of(lo.f == 1 ? 1 : up.residue[i] % lo.f);
    return GroupHom(up.group, lo.group, std::move(images));
}

PreEulerSystem0 stickelberger_system(const CyclotomicTower& tower) {
    PreEulerSystem0 sys;
    sys.tower = &tower;
    for (const auto& lvl : tower.levels)
        sys.values.push_back(stickelberger(lvl.data, lvl.s_primes, tower.t_primes));
    return sys;
}

DistributionReport verify_distribution(const CyclotomicTower& tower,
                                       const std::vector<GAElement>& values) {
    require(values.size() == tower.levels.size(), "BadInput",
            "one value per tower level");
    DistributionReport report;
    for (unsigned lower = 0; lower < tower.levels.size(); ++lower)
        for (unsigned upper = lower + 1; upper < tower.levels.size(); ++upper) {
            GroupHom pi = tower.projection(upper, lower);
            GAElement lhs = values[upper].mapped(pi);
            GAElement rhs = values[lower];
            const auto& lo = tower.levels[lower].data;
            for (auto v : tower.levels[upper].s_primes) {
                const auto& s_lo = tower.levels[lower].s_primes;
                if (std::find(s_lo.begin(), s_lo.end(), v) != s_lo.end()) continue;
                // Euler factor 1 - Fr_v^{-1} in the lower group ring
                GAElement factor = GAElement::scalar(lo.group, Cyclo::one());
                factor = factor - GAElement::basis(
                                      lo.group, lo.group.inverse(lo.element_of(
                                                    lo.f == 1 ? 1 : v % lo.f)));
                rhs = rhs * factor;
            }
            DistributionReport::PairCheck pc;
            pc.upper = upper;
            pc.lower = lower;
            pc.residual = lhs - rhs;
            pc.ok = pc.residual.is_zero();
            if (!pc.ok) report.all_ok = false;
            report.pairs.push_back(std::move(pc));
        }
    return report;
}

void require_distribution(const CyclotomicTower& tower, const std::vector<GAElement>& values) {
    DistributionReport report = verify_distribution(tower, values);
    for (const auto& pc : report.pairs)
        require(pc.ok, "RelationViolation",
                "distribution relation fails between levels " + std::to_string(pc.lower) +
                    " and " + std::to_string(pc.upper));
}

} // namespace eqk
