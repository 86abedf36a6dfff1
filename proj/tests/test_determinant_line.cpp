#include <doctest.h>

#include "eqk/determinant_line.hpp"
#include "eqk/prng.hpp"

using namespace eqk;

namespace {

GAMatrix random_unimodular(Prng& rng, const FiniteGroup& g, unsigned n, unsigned steps = 6) {
    GAMatrix m = GAMatrix::identity(g, n);
    for (unsigned s = 0; s < steps; ++s) {
        GAMatrix e = GAMatrix::identity(g, n);
        if (n > 1 && rng.below(3) != 0) {
            unsigned i = (unsigned)rng.below(n);
            unsigned j = (unsigned)rng.below(n - 1);
            if (j >= i) ++j;
            GAElement lam(g);
            lam.coeff((unsigned)rng.below(g.order())) = Cyclo(Rat(rng.int_in(-2, 2)));
            e.at(i, j) = lam;
        } else {
            unsigned i = (unsigned)rng.below(n);
            GAElement u = GAElement::basis(g, (unsigned)rng.below(g.order()));
            if (rng.below(2)) u = -u;
            e.at(i, i) = u;
        }
        m = m * e;
    }
    return m;
}

} // namespace

TEST_CASE("upsilon of the distinguished bases is 1") {
    const auto& cat = catalog("s3");
    TwoTermComplex c = TwoTermComplex::make(cat.reps, GAMatrix::identity(cat.group, 2));
    GradedLine line = upsilon_basis(c, GAMatrix::identity(cat.group, 2),
                                    GAMatrix::identity(cat.group, 2));
    CHECK(line.scaling == CentralElement::one(cat.table));
}

TEST_CASE("permuted degree-zero basis scales by the permutation norm") {
    const auto& cat = catalog("q8");
    TwoTermComplex c = TwoTermComplex::make(cat.reps, GAMatrix::identity(cat.group, 2));
    GAMatrix swap(cat.group, 2, 2);
    swap.at(0, 1) = GAElement::scalar(cat.group, Cyclo::one());
    swap.at(1, 0) = GAElement::scalar(cat.group, Cyclo::one());
    GradedLine line = upsilon_basis(c, swap, GAMatrix::identity(cat.group, 2));
    CHECK(line.scaling == reduced_norm(cat.reps, swap));

    // changing both degrees by the same matrix cancels
    Prng rng(11);
    GAMatrix u = random_unimodular(rng, cat.group, 2);
    GradedLine both = upsilon_basis(c, u, u);
    CHECK(both.scaling == CentralElement::one(cat.table));

    GAMatrix singular(cat.group, 2, 2);   // zero matrix
    CHECK_THROWS_WITH_AS(upsilon_basis(c, singular, u), doctest::Contains("NotABasis"),
                         Error);
}

TEST_CASE("primitive equivalence at good primes") {
    const auto& cat = catalog("s3");
    TwoTermComplex c = TwoTermComplex::make(cat.reps, GAMatrix::identity(cat.group, 2));
    GradedLine b = upsilon_basis(c, GAMatrix::identity(cat.group, 2),
                                 GAMatrix::identity(cat.group, 2));
    CHECK(primitive_equiv(b, b, 5));

    GradedLine scaled_by_p = b;
    scaled_by_p.scaling = b.scaling.scaled(Cyclo(5));
    CHECK(!primitive_equiv(b, scaled_by_p, 5));
    CHECK(primitive_equiv(b, scaled_by_p, 7));

    Prng rng(19);
    for (int trial = 0; trial < 8; ++trial) {
        GAMatrix u = random_unimodular(rng, cat.group, 2);
        GradedLine b2 = b;
        b2.scaling = b.scaling * reduced_norm(cat.reps, u);
        for (std::uint64_t p : {5ull, 7ull}) CHECK(primitive_equiv(b, b2, p));
    }
    CHECK_THROWS_WITH_AS(primitive_equiv(b, b, 3), doctest::Contains("BadPrime"), Error);

    // equivalence relation axioms: symmetry and transitivity on a sample
    GradedLine b3 = b;
    b3.scaling = b.scaling.scaled(Cyclo(Rat(7, 3)));   // 5-unit scaling
    CHECK(primitive_equiv(b, b3, 5));
    CHECK(primitive_equiv(b3, b, 5));
    GradedLine b4 = b3;
    b4.scaling = b3.scaling.scaled(Cyclo(Rat(3, 7)));
    CHECK(primitive_equiv(b3, b4, 5));
    CHECK(primitive_equiv(b, b4, 5));
}

TEST_CASE("acyclic values") {
    const auto& c2 = catalog("c2");
    TwoTermComplex idc = TwoTermComplex::make(c2.reps, GAMatrix::identity(c2.group, 2));
    CHECK(acyclic_value(idc) == CentralElement::one(c2.table));

    GAMatrix two(c2.group, 1, 1);
    two.at(0, 0) = GAElement::scalar(c2.group, Cyclo(2));
    TwoTermComplex dbl = TwoTermComplex::make(c2.reps, two);
    CentralElement v = acyclic_value(dbl);
    CHECK(v.coord(0) == Cyclo(2));
    CHECK(v.coord(1) == Cyclo(2));
    CHECK(v.is_p_unit(3));
    CHECK(!v.is_p_unit(2));

    const auto& s3 = catalog("s3");
    Prng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        GAMatrix u = random_unimodular(rng, s3.group, 3);
        TwoTermComplex c = TwoTermComplex::make(s3.reps, u, {5});
        CHECK(acyclic_value(c).is_p_unit(5));
    }

    GAMatrix zero(s3.group, 2, 2);
    TwoTermComplex sing = TwoTermComplex::make(s3.reps, zero);
    CHECK_THROWS_WITH_AS(acyclic_value(sing), doctest::Contains("Singular"), Error);
}

TEST_CASE("zeta elements") {
    const auto& cat = catalog("s3");
    TwoTermComplex c = TwoTermComplex::make(cat.reps, GAMatrix::identity(cat.group, 2));
    GradedLine identity_line = upsilon_basis(c, GAMatrix::identity(cat.group, 2),
                                             GAMatrix::identity(cat.group, 2));
    // lambda = identity, x = 1: the reference basis itself
    GradedLine z = zeta_element(identity_line, CentralElement::one(cat.table));
    CHECK(z.scaling == CentralElement::one(cat.table));

    // lambda with scaling c: z has scaling x / c, and lambda(z) = x
    Prng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Cyclo> cs, xs;
        for (unsigned i = 0; i < cat.table.size(); ++i) {
            cs.push_back(Cyclo(Rat(1 + (long)rng.below(9), 1 + (long)rng.below(4))));
            xs.push_back(Cyclo(Rat(1 + (long)rng.below(9), 1 + (long)rng.below(4))));
        }
        GradedLine lambda = identity_line;
        lambda.scaling = CentralElement(cat.table, cs);
        CentralElement x(cat.table, xs);
        GradedLine zz = zeta_element(lambda, x);
        CHECK(zz.scaling * lambda.scaling == x);

        // functoriality: a composite trivialization gives the two-step value
        GradedLine lambda2 = identity_line;
        std::vector<Cyclo> c2s;
        for (unsigned i = 0; i < cat.table.size(); ++i)
            c2s.push_back(Cyclo(Rat(1 + (long)rng.below(5))));
        lambda2.scaling = CentralElement(cat.table, c2s);
        GradedLine composite = identity_line;
        composite.scaling = lambda.scaling * lambda2.scaling;
        GradedLine direct = zeta_element(composite, x);
        GradedLine two_step = zeta_element(lambda2, x);
        two_step.scaling = two_step.scaling * lambda.scaling.inverse();
        CHECK(direct.scaling == two_step.scaling);
    }

    GradedLine singular = identity_line;
    singular.scaling = identity_line.scaling.scaled(Cyclo::zero());
    CHECK_THROWS_WITH_AS(zeta_element(singular, CentralElement::one(cat.table)),
                         doctest::Contains("Singular"), Error);
}

TEST_CASE("kernel test for the extended boundary map") {
    const auto& cat = catalog("c3");
    CHECK(ker_delta_test(CentralElement::one(cat.table), {2, 5, 7}));
    CHECK(!ker_delta_test(CentralElement::from_rational(cat.table, Rat(2)), {2}));
    CHECK(ker_delta_test(CentralElement::from_rational(cat.table, Rat(2)), {5, 7, 11}));

    const auto& s3 = catalog("s3");
    Prng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        GAMatrix u = random_unimodular(rng, s3.group, 2);
        CHECK(ker_delta_test(reduced_norm(s3.reps, u), {5, 7, 11}));
    }
    CHECK_THROWS_WITH_AS(
        ker_delta_test(CentralElement::one(s3.table), {3}),
        doctest::Contains("BadPrime"), Error);
}

TEST_CASE("positivity gate at symplectic characters") {
    // S3 has no symplectic characters: anything invertible passes
    const auto& s3 = catalog("s3");
    CHECK(hsm_membership(CentralElement::from_rational(s3.table, Rat(-17, 3))));

    const auto& q8 = catalog("q8");
    unsigned sympl = 0;
    for (unsigned i = 0; i < q8.table.size(); ++i)
        if (q8.table.irreducible(i).degree == 2) sympl = i;

    auto with_coord = [&](const Cyclo& v) {
        std::vector<Cyclo> coords(q8.table.size(), Cyclo::one());
        coords[sympl] = v;
        return CentralElement(q8.table, coords);
    };
    CHECK(!hsm_membership(with_coord(Cyclo(-1))));
    CHECK(hsm_membership(with_coord(Cyclo(3))));
    // totally positive irrational value: 2 + zeta_5 + zeta_5^4
    CHECK(hsm_membership(
        with_coord(Cyclo(2) + Cyclo::root_of_unity(5) + Cyclo::root_of_unity(5, 4))));
    // positive at one embedding, negative at the other: rejected
    CHECK(!hsm_membership(
        with_coord(Cyclo(1) + Cyclo::root_of_unity(5) + Cyclo::root_of_unity(5, 4))));
    // non-real symplectic coordinate: NotReal
    CHECK_THROWS_WITH_AS(hsm_membership(with_coord(Cyclo::root_of_unity(4))),
                         doctest::Contains("NotReal"), Error);
}
