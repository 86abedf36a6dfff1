#include <doctest.h>

#include "eqk/tower.hpp"

using namespace eqk;

TEST_CASE("single level tower is just a stickelberger element") {
    CyclotomicTower tower = CyclotomicTower::build({3}, {}, {});
    PreEulerSystem0 sys = stickelberger_system(tower);
    REQUIRE(sys.values.size() == 1);
    CHECK(sys.values[0].coefficients.coeff(tower.levels[0].data.group.identity()) ==
          Cyclo(Rat(1, 6)));
    CHECK(verify_distribution(sys).all_ok);
}

TEST_CASE("tower Q(zeta_3) in Q(zeta_9) in Q(zeta_27) with constant S") {
    CyclotomicTower tower = CyclotomicTower::build({3, 9, 27}, {}, {});
    PreEulerSystem0 sys = stickelberger_system(tower);
    DistributionReport report = verify_distribution(sys);
    CHECK(report.all_ok);
    CHECK(report.pairs.size() == 3);
    for (const auto& pc : report.pairs) CHECK(pc.residual.is_zero());

    // same tower with a T-modification
    CyclotomicTower smoothed = CyclotomicTower::build({3, 9, 27}, {}, {7});
    CHECK(verify_distribution(stickelberger_system(smoothed)).all_ok);
}

TEST_CASE("tower Q(zeta_3) in Q(zeta_15): S grows by the new ramified prime") {
    CyclotomicTower tower = CyclotomicTower::build({3, 15}, {}, {});
    PreEulerSystem0 sys = stickelberger_system(tower);
    CHECK(verify_distribution(sys).all_ok);

    // the relation is exactly the Euler-factor identity: pi(theta_15) =
    // (1 - Fr_5^{-1}) theta_3
    const auto& lo = tower.levels[0].data;
    GroupHom pi = tower.projection(1, 0);
    GAElement lhs = sys.values[1].coefficients.mapped(pi);
    GAElement factor = GAElement::scalar(lo.group, Cyclo::one()) -
                       GAElement::basis(lo.group, lo.group.inverse(lo.element_of(5 % 3)));
    CHECK(lhs == sys.values[0].coefficients * factor);
}

TEST_CASE("mutations are detected with the failing pair") {
    CyclotomicTower tower = CyclotomicTower::build({3, 9}, {}, {});
    PreEulerSystem0 sys = stickelberger_system(tower);
    std::vector<GAElement> values{sys.values[0].coefficients, sys.values[1].coefficients};
    values[1].coeff(0) += Cyclo(Rat(1, 7));
    DistributionReport report = verify_distribution(tower, values);
    CHECK(!report.all_ok);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].lower == 0);
    CHECK(report.pairs[0].upper == 1);
    CHECK(!report.pairs[0].residual.is_zero());
    CHECK_THROWS_WITH_AS(require_distribution(tower, values),
                         doctest::Contains("RelationViolation"), Error);
}

TEST_CASE("constant-one system with empty euler sets passes") {
    CyclotomicTower tower = CyclotomicTower::build({3, 9}, {}, {});
    std::vector<GAElement> ones;
    for (const auto& lvl : tower.levels)
        ones.push_back(GAElement::scalar(lvl.data.group, Cyclo::one()));
    CHECK(verify_distribution(tower, ones).all_ok);
}

TEST_CASE("tower input validation") {
    CHECK_THROWS_WITH_AS(CyclotomicTower::build({3, 5}, {}, {}),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(CyclotomicTower::build({3, 9}, {}, {3}),
                         doctest::Contains("BadInput"), Error);
    // S must be nested: extra prime at the bottom only is rejected
    CHECK_THROWS_WITH_AS(CyclotomicTower::build({3, 9}, {{7}, {}}, {}),
                         doctest::Contains("BadInput"), Error);
}
