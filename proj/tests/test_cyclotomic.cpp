#include <doctest.h>

#include "eqk/cyclotomic.hpp"
#include "eqk/prng.hpp"

using namespace eqk;

namespace {

// Uniform random element of Q(zeta_n) with small numerators/denominators.
Cyclo random_cyclo(Prng& rng, std::uint64_t n) {
    std::vector<Rat> c(euler_phi(n));
    for (auto& q : c)
        q = make_rat((long)rng.below(11) - 5, (long)rng.below(4) + 1);
    return Cyclo(n, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomial values") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    // phi(105) = 48; Phi_105 famously has a coefficient -2
    CHECK(cyclotomic_polynomial(105).size() == 49);
    CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("sum of primitive cube roots is -1") {
    Cyclo z3 = Cyclo::root_of_unity(3);
    Cyclo z3sq = Cyclo::root_of_unity(3, 2);
    CHECK(z3 + z3sq == Cyclo(-1));
}

TEST_CASE("inverse of 1 + i") {
    Cyclo i = Cyclo::root_of_unity(4);
    Cyclo x = Cyclo::one() + i;
    // (1+i)(1-i) = 2, so the inverse is (1-i)/2
    Cyclo expected = (Cyclo::one() - i) * Cyclo(Rat(1, 2));
    CHECK(x.inverse() == expected);
    CHECK(x * x.inverse() == Cyclo::one());
}

TEST_CASE("field axioms at mixed conductors") {
    Prng rng(2024);
    const std::uint64_t conductors[] = {1, 3, 4, 5, 8, 12, 15, 60};
    for (int trial = 0; trial < 60; ++trial) {
        Cyclo a = random_cyclo(rng, conductors[rng.below(8)]);
        Cyclo b = random_cyclo(rng, conductors[rng.below(8)]);
        Cyclo c = random_cyclo(rng, conductors[rng.below(8)]);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::one());
    }
}

TEST_CASE("mul with inverse is 1 for 50 random nonzero values") {
    Prng rng(7);
    int done = 0;
    while (done < 50) {
        Cyclo x = random_cyclo(rng, 2 + rng.below(20));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Cyclo::one());
        ++done;
    }
}

TEST_CASE("lifting commutes with arithmetic") {
    Prng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t m = 2 + rng.below(10);
        std::uint64_t n = m * (1 + rng.below(5));
        Cyclo a = random_cyclo(rng, m), b = random_cyclo(rng, m);
        CHECK((a * b).lifted_to(n) == a.lifted_to(n) * b.lifted_to(n));
        CHECK((a + b).lifted_to(n) == a.lifted_to(n) + b.lifted_to(n));
    }
}

TEST_CASE("galois action") {
    Cyclo z3 = Cyclo::root_of_unity(3);
    CHECK(z3.galois(2) == Cyclo::root_of_unity(3, 2));

    Prng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t n = 3 + rng.below(20);
        std::uint64_t a = 1 + rng.below(n - 1);
        if (gcd_u64(a, n) != 1) continue;
        Cyclo x = random_cyclo(rng, n), y = random_cyclo(rng, n);
        CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
        CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
    }

    // act(-1) fixes exactly the totally real values
    Cyclo real_val = Cyclo::root_of_unity(5) + Cyclo::root_of_unity(5, 4);
    CHECK(real_val.galois(4) == real_val);
    CHECK(real_val.is_real());
    CHECK(!Cyclo::root_of_unity(5).is_real());
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(Cyclo::zero().inverse(), doctest::Contains("DivisionByZero"),
                         Error);
    CHECK_THROWS_WITH_AS(Cyclo::root_of_unity(6).galois(2), doctest::Contains("InvalidUnit"),
                         Error);
}

TEST_CASE("p-integrality") {
    Cyclo x = Cyclo(Rat(1, 3)) + Cyclo::root_of_unity(5);
    CHECK(x.is_p_integral(5));
    CHECK(!x.is_p_integral(3));
    CHECK(Cyclo::root_of_unity(10).is_p_integral(5));

    // products of integral values stay integral
    Prng rng(13);
    int done = 0;
    while (done < 50) {
        std::uint64_t n = 1 + rng.below(12);
        if (n % 7 == 0) continue;
        std::vector<Rat> ca(euler_phi(n)), cb(euler_phi(n));
        for (auto& q : ca) q = make_rat((long)rng.below(9) - 4, rng.below(2) ? 3 : 1);
        for (auto& q : cb) q = make_rat((long)rng.below(9) - 4, rng.below(2) ? 5 : 1);
        Cyclo a(n, ca), b(n, cb);
        REQUIRE(a.is_p_integral(7));
        REQUIRE(b.is_p_integral(7));
        CHECK((a * b).is_p_integral(7));
        ++done;
    }
}

TEST_CASE("minimization finds the true conductor") {
    Cyclo z6 = Cyclo::root_of_unity(6);
    // zeta_6 = 1 + zeta_3 in Q(zeta_3), conductor 3
    CHECK(z6.minimized().conductor() == 3);
    CHECK(z6.minimized() == z6);
    Cyclo two = Cyclo::root_of_unity(12, 0) + Cyclo::one();
    CHECK(two.minimized().conductor() == 1);
    CHECK(two.minimized().rational_value() == 2);
}

TEST_CASE("certified sign") {
    // zeta_5 + zeta_5^4 = 2 cos(2 pi / 5) > 0, a root of x^2 + x - 1
    Cyclo golden = Cyclo::root_of_unity(5) + Cyclo::root_of_unity(5, 4);
    auto cert = certified_sign(golden);
    CHECK(cert.sign == Sign::Positive);
    CHECK(certified_sign(Cyclo::zero()).sign == Sign::Zero);
    // the other embedding: 2 cos(4 pi / 5) < 0
    CHECK(certified_sign(golden, 2).sign == Sign::Negative);

    CHECK_THROWS_WITH_AS(certified_sign(Cyclo::root_of_unity(3)),
                         doctest::Contains("NotReal"), Error);

    Prng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t n = 3 + rng.below(15);
        Cyclo x = random_cyclo(rng, n);
        Cyclo real_part = x + x.galois(n - 1);   // x + conj(x)
        auto c1 = certified_sign(real_part);
        auto c2 = certified_sign(-real_part);
        CHECK((int)c1.sign == -(int)c2.sign);
    }
}

TEST_CASE("sign is stable under raised precision") {
    // tiny but nonzero real value: zeta_60 + zeta_60^-1 - 2 cos small... use
    // (z + z^-1) - rational approximation to force high precision
    Cyclo z = Cyclo::root_of_unity(60) + Cyclo::root_of_unity(60, 59);
    Cyclo x = z - Cyclo(Rat(199076682, 100000000));   // 2 cos(pi/30) ~ 1.9890437
    auto cert = certified_sign(x);
    CHECK(cert.sign == Sign::Negative);
}
