#include <doctest.h>

#include "eqk/prng.hpp"
#include "eqk/rep.hpp"

using namespace eqk;

TEST_CASE("linear representations") {
    const auto& cat = catalog("s3");
    for (unsigned i = 0; i < cat.table.size(); ++i) {
        if (cat.table.irreducible(i).degree != 1) continue;
        IrredRep rep = rep_for_linear(cat.table, i);
        CHECK(verify_rep(rep, cat.table));
        for (unsigned g = 0; g < cat.group.order(); ++g)
            CHECK(rep.at(g)[0][0] == cat.table.irreducible(i).at_element(g));
    }
    // C3 faithful linear representation takes a primitive cube root value
    const auto& c3 = catalog("c3");
    bool saw_root = false;
    for (unsigned i = 0; i < c3.table.size(); ++i) {
        IrredRep rep = rep_for_linear(c3.table, i);
        for (unsigned g = 0; g < 3; ++g)
            if (rep.at(g)[0][0] == Cyclo::root_of_unity(3)) saw_root = true;
    }
    CHECK(saw_root);

    const auto& q8 = catalog("q8");
    for (unsigned i = 0; i < q8.table.size(); ++i)
        if (q8.table.irreducible(i).degree == 2)
            CHECK_THROWS_WITH_AS(rep_for_linear(q8.table, i),
                                 doctest::Contains("NotLinear"), Error);
}

TEST_CASE("catalog representations verify") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto& cat = catalog(name);
        for (unsigned i = 0; i < cat.table.size(); ++i)
            CHECK(verify_rep(cat.reps.rep(i), cat.table));
    }
}

TEST_CASE("monomial induction from A3 gives the 2-dim irreducible of S3") {
    const auto& cat = catalog("s3");
    const FiniteGroup& s3 = cat.group;
    std::vector<unsigned> rot;
    for (unsigned g = 0; g < 6; ++g)
        if (s3.element_order(g) == 3) rot.push_back(g);
    Subgroup a3sub = Subgroup::generated(s3, rot);
    EmbeddedSubgroup a3 = materialize(a3sub);
    CharacterTable ta3 = CharacterTable::compute(a3.group);
    for (unsigned li = 0; li < ta3.size(); ++li) {
        if (ta3.irreducible(li).is_trivial()) continue;
        std::vector<Cyclo> lam(3);
        for (unsigned x = 0; x < 3; ++x) lam[x] = ta3.irreducible(li).at_element(x);
        auto ind = monomial_induce(cat.table, a3, lam, a3sub.left_transversal());
        REQUIRE(ind.irreducible);
        CHECK(ind.rep.degree == 2);
        CHECK(verify_rep(ind.rep, cat.table));
        CHECK(cat.table.irreducible(ind.rep.char_index).degree == 2);
    }
}

TEST_CASE("induction of the trivial character of G itself is trivial") {
    const auto& cat = catalog("d4");
    EmbeddedSubgroup whole = materialize(Subgroup::whole(cat.group));
    std::vector<Cyclo> triv(cat.group.order(), Cyclo::one());
    auto ind = monomial_induce(cat.table, whole, triv, {cat.group.identity()});
    REQUIRE(ind.irreducible);
    CHECK(ind.rep.degree == 1);
    CHECK(cat.table.irreducible(ind.rep.char_index).is_trivial());
}

TEST_CASE("induction from C4 to Q8 gives the 2-dim irreducible") {
    const auto& cat = catalog("q8");
    const FiniteGroup& q8 = cat.group;
    unsigned i_elt = 0;
    for (unsigned g = 0; g < 8; ++g)
        if (q8.element_order(g) == 4) {
            i_elt = g;
            break;
        }
    Subgroup c4 = Subgroup::generated(q8, {i_elt});
    REQUIRE(c4.order() == 4);
    EmbeddedSubgroup h = materialize(c4);
    CharacterTable ht = CharacterTable::compute(h.group);
    bool found2dim = false;
    for (unsigned li = 0; li < ht.size(); ++li) {
        std::vector<Cyclo> lam(4);
        for (unsigned x = 0; x < 4; ++x) lam[x] = ht.irreducible(li).at_element(x);
        auto ind = monomial_induce(cat.table, h, lam, c4.left_transversal());
        if (ind.irreducible && ind.rep.degree == 2) {
            found2dim = true;
            CHECK(verify_rep(ind.rep, cat.table));
        }
    }
    CHECK(found2dim);
}

TEST_CASE("perturbing a matrix entry breaks verification") {
    const auto& cat = catalog("s3");
    for (unsigned i = 0; i < cat.table.size(); ++i) {
        if (cat.table.irreducible(i).degree != 2) continue;
        IrredRep broken = cat.reps.rep(i);
        broken.matrices[1][0][0] += Cyclo::one();
        CHECK(!verify_rep(broken, cat.table));
    }
}

TEST_CASE("conjugated representations still verify") {
    // conjugating by an invertible rational matrix preserves multiplicativity
    // and traces; runs on the 2-dim irreducible of d4
    const auto& cat = catalog("d4");
    Prng rng(41);
    for (unsigned i = 0; i < cat.table.size(); ++i) {
        if (cat.table.irreducible(i).degree != 2) continue;
        CycloMatrix p(2, std::vector<Cyclo>(2));
        do {
            for (auto& row : p)
                for (auto& v : row) v = Cyclo(Rat((long)rng.below(7) - 3));
        } while (cyclo_mat_det(p).is_zero());
        // inverse of a 2x2
        Cyclo det = cyclo_mat_det(p);
        CycloMatrix pinv{{p[1][1] / det, -p[0][1] / det}, {-p[1][0] / det, p[0][0] / det}};
        IrredRep conj = cat.reps.rep(i);
        for (auto& m : conj.matrices) m = cyclo_mat_mul(pinv, cyclo_mat_mul(m, p));
        CHECK(verify_rep(conj, cat.table));
    }
}

TEST_CASE("trace of rho(central z) equals deg * wedderburn coordinate") {
    const auto& cat = catalog("s3");
    Prng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        GAElement z(cat.group);
        for (const auto& cls : cat.group.conjugacy_classes()) {
            Cyclo v(Rat((long)rng.below(9) - 4, 1 + (long)rng.below(3)));
            for (unsigned g : cls) z.coeff(g) = v;
        }
        CentralElement c = wedderburn_coords(cat.table, z);
        for (unsigned i = 0; i < cat.table.size(); ++i) {
            Cyclo tr = cyclo_mat_trace(cat.reps.apply(i, z));
            CHECK(tr == c.coord(i) * Cyclo(Rat((long)cat.table.irreducible(i).degree)));
        }
    }
}

TEST_CASE("wedderburn surjectivity: matrix coefficients span the blocks") {
    // rank over Q(zeta) of the map E[G] -> prod M_deg(E): the images of the
    // |G| basis elements must span a space of dimension sum deg^2 = |G|
    for (const char* name : {"s3", "q8", "d5"}) {
        const auto& cat = catalog(name);
        unsigned n = cat.group.order();
        std::vector<std::vector<Cyclo>> rows;
        for (unsigned g = 0; g < n; ++g) {
            std::vector<Cyclo> row;
            for (unsigned i = 0; i < cat.table.size(); ++i) {
                const auto& m = cat.reps.rep(i).at(g);
                for (const auto& r : m)
                    for (const auto& v : r) row.push_back(v);
            }
            rows.push_back(std::move(row));
        }
        // Gaussian elimination rank
        unsigned rank = 0;
        unsigned cols = (unsigned)rows[0].size();
        for (unsigned col = 0; col < cols && rank < n; ++col) {
            unsigned pivot = rank;
            while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
            if (pivot == n) continue;
            std::swap(rows[pivot], rows[rank]);
            Cyclo inv = rows[rank][col].inverse();
            for (unsigned r2 = 0; r2 < n; ++r2) {
                if (r2 == rank || rows[r2][col].is_zero()) continue;
                Cyclo f = rows[r2][col] * inv;
                for (unsigned c2 = col; c2 < cols; ++c2)
                    rows[r2][c2] -= f * rows[rank][c2];
            }
            ++rank;
        }
        CHECK(rank == n);
    }
}
