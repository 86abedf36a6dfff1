// Acceptance suite: runs every criterion at its stated tolerance (all values
// exact; tolerances are time limits) and prints one pass/fail line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eqk/derivative.hpp"
#include "eqk/determinant_line.hpp"
#include "eqk/json_io.hpp"
#include "eqk/prng.hpp"
#include "eqk/suite.hpp"
#include "eqk/tower.hpp"
#include "oracles.hpp"

using namespace eqk;

namespace {

GAElement random_element(Prng& rng, const FiniteGroup& g, long spread = 2) {
    GAElement x(g);
    for (unsigned e = 0; e < g.order(); ++e)
        x.coeff(e) = Cyclo(Rat(rng.int_in(-spread, spread)));
    return x;
}

GAMatrix random_matrix(Prng& rng, const FiniteGroup& g, unsigned n, long spread = 2) {
    GAMatrix m(g, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = random_element(rng, g, spread);
    return m;
}

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

// left regular representation of a matrix over the group algebra, as one big
// rational matrix; its determinant factors as prod_chi Nrd_chi^{deg chi}
Cyclo regular_determinant(const GAMatrix& m) {
    const FiniteGroup& g = m.group();
    unsigned n = m.rows(), order = g.order();
    CycloMatrix big(n * order, std::vector<Cyclo>(n * order));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned a = 0; a < order; ++a)
                for (unsigned b = 0; b < order; ++b) {
                    const Cyclo& c = m.at(i, j).coeff(g.mul(a, g.inverse(b)));
                    if (!c.is_zero()) big[i * order + a][j * order + b] = c;
                }
    return cyclo_mat_det(std::move(big));
}

bool criterion_char_tables() {
    std::vector<std::string> names{"c2", "c3", "c4", "v4", "s3", "c6",
                                   "d4", "q8", "a4", "s4", "d5"};
    for (const auto& name : names) {
        const auto& cat = catalog(name);
        unsigned long deg_sq = 0;
        for (const auto& chi : cat.table.irreducibles()) deg_sq += chi.degree * chi.degree;
        if (deg_sq != cat.group.order()) return false;
        for (unsigned i = 0; i < cat.table.size(); ++i)
            for (unsigned j = 0; j < cat.table.size(); ++j) {
                Cyclo ip = class_function_inner(cat.group, cat.table.irreducible(i).values,
                                                cat.table.irreducible(j).values);
                if (!(ip == (i == j ? Cyclo::one() : Cyclo::zero()))) return false;
            }
        // column orthogonality: sum_chi chi(g) chi(h^{-1}) = |C_G(g)| delta
        for (unsigned c1 = 0; c1 < cat.group.num_classes(); ++c1)
            for (unsigned c2 = 0; c2 < cat.group.num_classes(); ++c2) {
                Cyclo s;
                for (const auto& chi : cat.table.irreducibles())
                    s += chi.values[c1] * chi.values[cat.group.inverse_class(c2)];
                Cyclo expect =
                    c1 == c2 ? Cyclo(Rat((long)(cat.group.order() /
                                                cat.group.conjugacy_classes()[c1].size())))
                             : Cyclo::zero();
                if (!(s == expect)) return false;
            }
        if (cat.group.order() <= 12) {
            auto expected = oracle::character_table_bruteforce(cat.group);
            if (expected.size() != cat.table.size()) return false;
            for (const auto& chi : cat.table.irreducibles())
                if (std::find(expected.begin(), expected.end(), chi.values) ==
                    expected.end())
                    return false;
        }
    }
    return true;
}

bool criterion_nrd_multiplicative() {
    Prng rng(1002);
    const char* names[] = {"s3", "q8", "d4"};
    for (unsigned trial = 0; trial < 200; ++trial) {
        const auto& cat = catalog(names[trial % 3]);
        unsigned n = 1 + (unsigned)rng.below(3);
        GAMatrix a = random_matrix(rng, cat.group, n);
        GAMatrix b = random_matrix(rng, cat.group, n);
        CentralElement na = reduced_norm(cat.reps, a);
        CentralElement nb = reduced_norm(cat.reps, b);
        if (!(reduced_norm(cat.reps, a * b) == na * nb)) return false;
        // regular-representation factorization oracle on a subsample
        if (trial % 10 == 0) {
            Cyclo prod = Cyclo::one();
            for (unsigned chi = 0; chi < cat.table.size(); ++chi)
                for (unsigned k = 0; k < cat.table.irreducible(chi).degree; ++k)
                    prod *= na.coord(chi);
            if (!(prod == regular_determinant(a))) return false;
        }
    }
    return true;
}

bool criterion_wedge_scaling() {
    Prng rng(1003);
    const char* names[] = {"s3", "q8"};
    std::vector<std::vector<GAModule>> modules(2);
    for (unsigned gidx = 0; gidx < 2; ++gidx)
        for (unsigned r = 1; r <= 3; ++r)
            modules[gidx].push_back(
                GAModule::free_module(catalog(names[gidx]).reps, r));
    for (unsigned trial = 0; trial < 100; ++trial) {
        unsigned gidx = trial % 2;
        const auto& cat = catalog(names[gidx]);
        unsigned rank = 1 + (unsigned)rng.below(3);
        const GAModule& m = modules[gidx][rank - 1];
        GAMatrix c = random_matrix(rng, cat.group, rank);
        std::vector<std::vector<GAElement>> images;
        for (unsigned j = 0; j < rank; ++j) {
            std::vector<GAElement> row;
            for (unsigned i = 0; i < rank; ++i) row.push_back(c.at(j, i));
            images.push_back(row);
        }
        if (!(wedge_free(m, images) ==
              basis_wedge(m).scaled(reduced_norm(cat.reps, c))))
            return false;
    }
    return true;
}

bool criterion_gram() {
    Prng rng(1004);
    const char* names[] = {"s3", "q8"};
    std::vector<std::vector<GAModule>> modules(2);
    for (unsigned gidx = 0; gidx < 2; ++gidx)
        for (unsigned r = 1; r <= 3; ++r)
            modules[gidx].push_back(
                GAModule::free_module(catalog(names[gidx]).reps, r));
    for (unsigned trial = 0; trial < 100; ++trial) {
        unsigned gidx = trial % 2;
        const auto& cat = catalog(names[gidx]);
        unsigned rank = 1 + (unsigned)rng.below(3);
        const GAModule& m = modules[gidx][rank - 1];
        std::vector<std::vector<GAElement>> elements, hom_images;
        for (unsigned b = 0; b < rank; ++b) {
            std::vector<GAElement> coords;
            for (unsigned j = 0; j < rank; ++j)
                coords.push_back(random_element(rng, cat.group));
            elements.push_back(coords);
        }
        std::vector<ModuleHom> homs;
        for (unsigned a = 0; a < rank; ++a) {
            std::vector<GAElement> im;
            for (unsigned j = 0; j < rank; ++j)
                im.push_back(random_element(rng, cat.group));
            hom_images.push_back(im);
            homs.push_back(ModuleHom::on_free(m, im));
        }
        CentralElement lhs = evaluation_image(wedge_free(m, elements), homs);
        GAMatrix gram(cat.group, rank, rank);
        for (unsigned a = 0; a < rank; ++a)
            for (unsigned b = 0; b < rank; ++b) {
                GAElement s(cat.group);
                for (unsigned j = 0; j < rank; ++j)
                    s = s + elements[b][j] * hom_images[a][j];
                gram.at(a, b) = s;
            }
        if (!(lhs == reduced_norm_op(cat.reps, gram))) return false;
    }
    return true;
}

bool criterion_stickelberger() {
    const std::uint64_t conductors[] = {3, 4, 5, 7, 8, 9, 12, 15};
    for (auto f : conductors) {
        CyclotomicData data = CyclotomicData::build(f);
        std::vector<std::uint64_t> s;
        for (auto [p, e] : factorize(f)) s.push_back(p);
        for (const std::vector<std::uint64_t>& t :
             {std::vector<std::uint64_t>{}, std::vector<std::uint64_t>{2},
              std::vector<std::uint64_t>{7}}) {
            if (!t.empty() && f % t[0] == 0) continue;   // keep T coprime
            StickelbergerElement theta = stickelberger(data, s, t);
            if (!(theta.coefficients == oracle::stickelberger_oracle(data, s, t)))
                return false;
            if (!theta.rational) return false;
            if (admissible_t(f, t))
                for (unsigned g = 0; g < data.group.order(); ++g) {
                    const Cyclo& c = theta.coefficients.coeff(g);
                    if (!c.is_rational() || !is_integer(c.rational_value())) return false;
                }
        }
    }
    return true;
}

bool criterion_distribution() {
    CyclotomicTower t1 = CyclotomicTower::build({3, 9, 27}, {}, {});
    if (!verify_distribution(stickelberger_system(t1)).all_ok) return false;
    CyclotomicTower t2 = CyclotomicTower::build({3, 15}, {}, {});
    if (!verify_distribution(stickelberger_system(t2)).all_ok) return false;

    // every single-coordinate mutation must be detected
    Prng rng(1006);
    for (const CyclotomicTower* tower : {&t1, &t2}) {
        PreEulerSystem0 sys = stickelberger_system(*tower);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<GAElement> values;
            for (const auto& v : sys.values) values.push_back(v.coefficients);
            unsigned level = (unsigned)rng.below(values.size());
            unsigned coeff = (unsigned)rng.below(values[level].group().order());
            values[level].coeff(coeff) += Cyclo(Rat(1, 13));
            if (verify_distribution(*tower, values).all_ok) return false;
        }
    }
    return true;
}

bool criterion_order_of_vanishing() {
    Prng rng(1007);
    const std::uint64_t conductors[] = {3, 4, 5, 7, 8, 9, 12, 15};
    for (unsigned trial = 0; trial < 50; ++trial) {
        std::uint64_t f = conductors[rng.below(8)];
        CyclotomicData data = CyclotomicData::build(f);
        std::vector<std::uint64_t> finite{};
        for (auto [p, e] : factorize(f)) finite.push_back(p);
        // a couple of random unramified primes
        for (int extra = 0; extra < 2; ++extra) {
            std::uint64_t p = 2 + rng.below(60);
            while (!is_prime_u64(p) || f % p == 0 ||
                   std::find(finite.begin(), finite.end(), p) != finite.end())
                ++p;
            finite.push_back(p);
        }
        GaloisSetup setup = GaloisSetup::cyclotomic(data, finite);
        std::vector<std::string> s_labels{"inf"};
        std::vector<std::uint64_t> s_primes;
        for (auto p : finite)
            if (f % p == 0 || rng.below(2)) {
                s_labels.push_back(std::to_string(p));
                s_primes.push_back(p);
            }
        for (unsigned i = 0; i < data.table.size(); ++i) {
            const Character& chi = data.table.irreducible(i);
            unsigned ord = order_of_vanishing(chi, setup, s_labels);
            if (chi.is_trivial()) {
                if (ord != s_labels.size() - 1) return false;
            }
            Cyclo l = dirichlet_l_value(data.characters[i], s_primes, {});
            if ((ord == 0) != !l.is_zero()) return false;
        }
    }
    return true;
}

bool criterion_idempotents() {
    Prng rng(1008);
    const char* names[] = {"s3", "d4", "c6"};
    for (unsigned trial = 0; trial < 50; ++trial) {
        const auto& cat = catalog(names[trial % 3]);
        GaloisSetup setup;
        setup.group = cat.group;
        setup.table = cat.table;
        Place inf;
        inf.label = "inf";
        inf.archimedean = true;
        std::vector<unsigned> invs;
        invs.push_back(cat.group.identity());
        for (unsigned g = 0; g < cat.group.order(); ++g)
            if (cat.group.element_order(g) == 2) invs.push_back(g);
        inf.decomposition =
            Subgroup::generated(setup.group, {invs[rng.below(invs.size())]});
        setup.places.push_back(inf);
        unsigned num_finite = 2 + (unsigned)rng.below(3);
        std::vector<std::string> s{"inf"};
        for (unsigned i = 0; i < num_finite; ++i) {
            Place p;
            p.label = "v" + std::to_string(i);
            p.frobenius = (unsigned)rng.below(cat.group.order());
            p.decomposition = Subgroup::generated(setup.group, {p.frobenius});
            p.norm = 2 + rng.below(80);
            setup.places.push_back(p);
            s.push_back(p.label);
        }
        setup.validate();
        std::vector<std::string> sigma1;
        for (const auto& label : s)
            if (rng.below(2) && sigma1.size() + 1 < s.size()) sigma1.push_back(label);
        try {
            for (unsigned chi = 0; chi < cat.table.size(); ++chi)
                idempotent_equivalence_check(setup, s, sigma1, chi);
        } catch (const Error&) {
            return false;
        }
        // the assembled idempotent squares to itself
        CentralElement e = splitting_idempotent(setup, s, sigma1);
        if (!(e * e == e)) return false;
    }
    return true;
}

bool criterion_primitive_calculus() {
    Prng rng(1009);
    const auto& cat = catalog("s3");
    for (unsigned trial = 0; trial < 50; ++trial) {
        unsigned d = 1 + (unsigned)rng.below(3);
        GAMatrix u = random_unimodular(rng, cat.group, d);
        CentralElement nrd = reduced_norm(cat.reps, u);
        for (std::uint64_t p : {5ull, 7ull, 11ull})
            if (!nrd.is_p_unit(p)) return false;
        TwoTermComplex c = TwoTermComplex::make(cat.reps, u, {5, 7, 11});
        CentralElement value = acyclic_value(c);
        for (std::uint64_t p : {5ull, 7ull, 11ull})
            if (!value.is_p_unit(p)) return false;

        TwoTermComplex idc = TwoTermComplex::make(cat.reps, GAMatrix::identity(cat.group, d));
        GradedLine b = upsilon_basis(idc, GAMatrix::identity(cat.group, d),
                                     GAMatrix::identity(cat.group, d));
        GradedLine b_u = b;
        b_u.scaling = b.scaling * nrd;
        GradedLine b_p = b;
        b_p.scaling = b.scaling.scaled(Cyclo(5));
        if (!primitive_equiv(b, b, 5)) return false;          // reflexive
        if (!primitive_equiv(b, b_u, 5)) return false;
        if (!primitive_equiv(b_u, b, 5)) return false;        // symmetric
        if (primitive_equiv(b, b_p, 5)) return false;         // p-scaling fails
        if (!primitive_equiv(b, b_p, 7)) return false;
        GradedLine b_uu = b_u;
        b_uu.scaling = b_u.scaling * reduced_norm(cat.reps, random_unimodular(rng, cat.group, d));
        if (!primitive_equiv(b, b_uu, 5)) return false;       // transitive sample
    }
    return true;
}

bool criterion_derivative() {
    Prng rng(1010);
    struct Setting {
        FiniteGroup delta;
        std::uint64_t p;
    };
    std::vector<Setting> settings;
    settings.push_back({FiniteGroup::cyclic(2), 3});
    settings.push_back({FiniteGroup::symmetric(3), 5});
    for (const auto& st : settings) {
        ProductTower tower = ProductTower::make(st.delta, st.p, 3);
        for (unsigned k = 0; k <= 2; ++k) {
            GAElement base = random_element(rng, st.delta, 3);
            std::vector<ProductValue> values;
            for (unsigned n = 1; n <= 3; ++n)
                values.push_back(inflated_power_family(tower, n, base, 1, k));
            DerivativeReport rep = finite_derivative(tower, values, 1, k);
            if (!rep.all_divisible || !rep.stable) return false;
            for (const auto& lvl : rep.levels)
                if (!(lvl.derivative == base)) return false;

            // generator change: families built from sigma^a, a*k < p^n
            if (k == 0) continue;
            std::uint64_t a = 2;
            std::vector<ProductValue> fam_a;
            for (unsigned n = 1; n <= 3; ++n)
                fam_a.push_back(inflated_power_family(tower, n, base, a, k));
            DerivativeReport ra = finite_derivative(tower, fam_a, a, k);
            DerivativeReport r1 = finite_derivative(tower, fam_a, 1, k);
            if (!ra.all_divisible) return false;
            for (unsigned n = 1; n <= 3; ++n) {
                std::uint64_t q = tower.level_order(n);
                if (!(ra.levels[n - 1].derivative == base)) return false;
                if (k * a >= q) continue;
                if (!r1.levels[n - 1].divisible) return false;
                Cyclo unit_image(Rat(1));
                for (unsigned i = 0; i < k; ++i) unit_image *= Cyclo(Rat((long)a));
                if (!(r1.levels[n - 1].derivative == base.scaled(unit_image)))
                    return false;
            }
        }
    }
    return true;
}

bool criterion_hsm() {
    const auto& q8 = catalog("q8");
    unsigned sympl = 0;
    bool found = false;
    for (unsigned i = 0; i < q8.table.size(); ++i)
        if (frobenius_schur(q8.table.irreducible(i)) == -1) {
            sympl = i;
            found = true;
        }
    if (!found) return false;
    auto with_coord = [&](const Cyclo& v) {
        std::vector<Cyclo> coords(q8.table.size(), Cyclo::one());
        coords[sympl] = v;
        return CentralElement(q8.table, coords);
    };
    if (hsm_membership(with_coord(Cyclo(-1)))) return false;
    if (hsm_membership(with_coord(Cyclo(Rat(-7, 2))))) return false;
    if (!hsm_membership(with_coord(Cyclo(2)))) return false;
    if (!hsm_membership(with_coord(Cyclo(Rat(5, 3))))) return false;
    // certified irrational signs, both orientations
    Cyclo golden = Cyclo::root_of_unity(5) + Cyclo::root_of_unity(5, 4);
    if (!hsm_membership(with_coord(golden + Cyclo(2)))) return false;
    if (hsm_membership(with_coord(golden + Cyclo(1)))) return false;
    // no symplectic characters anywhere in S3: everything invertible passes
    const auto& s3 = catalog("s3");
    if (!hsm_membership(CentralElement::from_rational(s3.table, Rat(-9, 4)))) return false;
    return true;
}

bool criterion_determinism() {
    SuiteConfig config;
    config.suite = "identities";
    config.seed = 1;
    config.cases = 100;
    std::string a = run_suite(config).dump();
    std::string b = run_suite(config).dump();
    if (a != b) return false;
    Json report = Json::parse(a);
    return report.at("all_ok").get<bool>();
}

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    std::function<bool()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "character tables: exact orthogonality, degree sums, brute-force match", 5,
         criterion_char_tables},
        {2, "reduced-norm multiplicativity and regular-representation oracle", 30,
         criterion_nrd_multiplicative},
        {3, "endomorphism scaling of basis wedges", 30, criterion_wedge_scaling},
        {4, "duality pairing against the block-determinant oracle", 30, criterion_gram},
        {5, "stickelberger elements: partial-zeta oracle and integrality", 10,
         criterion_stickelberger},
        {6, "distribution relation on towers, mutation detection", 10,
         criterion_distribution},
        {7, "order of vanishing vs non-vanishing of L-values", 10,
         criterion_order_of_vanishing},
        {8, "three-way idempotent support equivalence", 10, criterion_idempotents},
        {9, "primitive-basis calculus at good primes", 30, criterion_primitive_calculus},
        {10, "finite-level derivatives and generator change", 10, criterion_derivative},
        {11, "symplectic positivity gate with certified signs", 5, criterion_hsm},
        {12, "byte-identical reports for identical seeds", 60, criterion_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        if (!ok || !in_time) ++failures;
        std::printf("%s criterion %2d: %s (%.2fs, limit %.0fs)%s\n",
                    ok && in_time ? "PASS" : "FAIL", c.number, c.label, secs,
                    c.limit_seconds, note.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
