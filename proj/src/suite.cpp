#include "eqk/suite.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eqk/prng.hpp"

namespace eqk {

namespace {

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string witness;
};

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

Cyclo random_cyclo(Prng& rng, std::uint64_t n) {
    std::vector<Rat> c(euler_phi(n));
    for (auto& q : c) q = make_rat(rng.int_in(-5, 5), (long)rng.below(3) + 1);
    return Cyclo(n, std::move(c));
}

// ---------------------------------------------------------------------------
// the identity families of the "identities" suite

void check_cyclo_axioms(Prng& rng, std::vector<CheckEntry>& out) {
    static const std::uint64_t conductors[] = {1, 3, 4, 5, 8, 9, 12, 15, 20, 24, 45, 60};
    Cyclo a = random_cyclo(rng, conductors[rng.below(12)]);
    Cyclo b = random_cyclo(rng, conductors[rng.below(12)]);
    Cyclo c = random_cyclo(rng, conductors[rng.below(12)]);
    CheckEntry e{"cyclo-field-axioms", true, ""};
    if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)) ||
        !(a * (b + c) == a * b + a * c))
        e = {"cyclo-field-axioms", false, "associativity or distributivity"};
    else if (!a.is_zero() && !(a * a.inverse() == Cyclo::one()))
        e = {"cyclo-field-axioms", false, "inverse"};
    out.push_back(e);

    std::uint64_t m = conductors[rng.below(6)];
    std::uint64_t lift = m * (1 + rng.below(4));
    Cyclo x = random_cyclo(rng, m), y = random_cyclo(rng, m);
    CheckEntry l{"cyclo-lift-homomorphism", true, ""};
    if (!((x * y).lifted_to(lift) == x.lifted_to(lift) * y.lifted_to(lift)))
        l = {"cyclo-lift-homomorphism", false,
             "lift to " + std::to_string(lift) + " from " + std::to_string(m)};
    out.push_back(l);
}

void check_nrd_multiplicative(Prng& rng, const std::vector<std::string>& groups,
                              std::vector<CheckEntry>& out) {
    const auto& cat = catalog(groups[rng.below(groups.size())]);
    unsigned n = 1 + (unsigned)rng.below(2);
    GAMatrix a = random_matrix(rng, cat.group, n);
    GAMatrix b = random_matrix(rng, cat.group, n);
    bool ok = reduced_norm(cat.reps, a * b) ==
              reduced_norm(cat.reps, a) * reduced_norm(cat.reps, b);
    out.push_back({"nrd-multiplicative", ok, ok ? "" : "over " + cat.name});
}

void check_wedge_scaling(Prng& rng, const std::vector<std::string>& groups,
                         std::vector<CheckEntry>& out) {
    const auto& cat = catalog(groups[rng.below(groups.size())]);
    unsigned rank = 1 + (unsigned)rng.below(2);
    GAModule m = GAModule::free_module(cat.reps, rank);
    GAMatrix c = random_matrix(rng, cat.group, rank);
    std::vector<std::vector<GAElement>> images;
    for (unsigned j = 0; j < rank; ++j) {
        std::vector<GAElement> row;
        for (unsigned i = 0; i < rank; ++i) row.push_back(c.at(j, i));
        images.push_back(row);
    }
    bool ok = wedge_free(m, images) == basis_wedge(m).scaled(reduced_norm(cat.reps, c));
    out.push_back({"wedge-endomorphism-scaling", ok, ok ? "" : "over " + cat.name});
}

void check_gram(Prng& rng, const std::vector<std::string>& groups,
                std::vector<CheckEntry>& out) {
    const auto& cat = catalog(groups[rng.below(groups.size())]);
    unsigned rank = 1 + (unsigned)rng.below(2);
    GAModule m = GAModule::free_module(cat.reps, rank);
    std::vector<std::vector<GAElement>> elements;
    std::vector<std::vector<GAElement>> hom_images;
    for (unsigned b = 0; b < rank; ++b) {
        std::vector<GAElement> coords;
        for (unsigned j = 0; j < rank; ++j) coords.push_back(random_element(rng, cat.group));
        elements.push_back(coords);
    }
    std::vector<ModuleHom> homs;
    for (unsigned a = 0; a < rank; ++a) {
        std::vector<GAElement> im;
        for (unsigned j = 0; j < rank; ++j) im.push_back(random_element(rng, cat.group));
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
    bool ok = lhs == reduced_norm_op(cat.reps, gram);
    out.push_back({"gram-determinant", ok, ok ? "" : "over " + cat.name});
}

void check_change_of_s(Prng& rng, std::vector<CheckEntry>& out) {
    static const std::uint64_t conductors[] = {3, 4, 5, 7, 8, 9, 12};
    std::uint64_t f = conductors[rng.below(7)];
    CyclotomicData data = CyclotomicData::build(f);
    std::vector<std::uint64_t> s;
    for (auto [p, e] : factorize(f)) s.push_back(p);
    std::uint64_t v = 0;
    for (std::uint64_t p = 2 + rng.below(40);; ++p)
        if (is_prime_u64(p) && f % p != 0) {
            v = p;
            break;
        }
    std::vector<std::uint64_t> s_big = s;
    s_big.push_back(v);
    StickelbergerElement small = stickelberger(data, s, {});
    StickelbergerElement big = stickelberger(data, s_big, {});
    GAElement factor =
        GAElement::scalar(data.group, Cyclo::one()) -
        GAElement::basis(data.group,
                         data.group.inverse(data.element_of(v % (f == 1 ? 1 : f))));
    bool ok = big.coefficients == small.coefficients * factor && big.rational;
    out.push_back({"euler-factor-change-of-s", ok,
                   ok ? "" : "f=" + std::to_string(f) + " v=" + std::to_string(v)});
}

void check_idempotent_equivalence(Prng& rng, std::vector<CheckEntry>& out) {
    static const char* names[] = {"s3", "d4", "c6"};
    const auto& cat = catalog(names[rng.below(3)]);
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
    inf.decomposition = Subgroup::generated(setup.group, {invs[rng.below(invs.size())]});
    setup.places.push_back(inf);
    unsigned num_finite = 2 + (unsigned)rng.below(3);
    std::vector<std::string> s{"inf"};
    for (unsigned i = 0; i < num_finite; ++i) {
        Place p;
        p.label = "v" + std::to_string(i);
        p.frobenius = (unsigned)rng.below(cat.group.order());
        p.decomposition = Subgroup::generated(setup.group, {p.frobenius});
        p.norm = 2 + rng.below(60);
        setup.places.push_back(p);
        s.push_back(p.label);
    }
    std::vector<std::string> sigma1;
    for (const auto& label : s)
        if (rng.below(2) && sigma1.size() + 1 < s.size()) sigma1.push_back(label);
    CheckEntry e{"idempotent-support-equivalence", true, ""};
    try {
        for (unsigned chi = 0; chi < cat.table.size(); ++chi)
            idempotent_equivalence_check(setup, s, sigma1, chi);
    } catch (const Error& err) {
        e.pass = false;
        e.witness = err.what();
    }
    out.push_back(e);
}

void check_wedderburn_ring_map(Prng& rng, const std::vector<std::string>& groups,
                               std::vector<CheckEntry>& out) {
    const auto& cat = catalog(groups[rng.below(groups.size())]);
    GAElement a(cat.group), b(cat.group);
    for (const auto& cls : cat.group.conjugacy_classes()) {
        Cyclo va(Rat(rng.int_in(-4, 4), 1 + (long)rng.below(3)));
        Cyclo vb(Rat(rng.int_in(-4, 4), 1 + (long)rng.below(3)));
        for (unsigned g : cls) {
            a.coeff(g) = va;
            b.coeff(g) = vb;
        }
    }
    CentralElement ca = wedderburn_coords(cat.table, a);
    CentralElement cb = wedderburn_coords(cat.table, b);
    bool ok = wedderburn_coords(cat.table, a * b) == ca * cb &&
              ca.to_group_algebra() == a;
    out.push_back({"wedderburn-ring-map", ok, ok ? "" : "over " + cat.name});
}

std::vector<CheckEntry> identities_case(std::uint64_t seed, unsigned case_index,
                                        const std::vector<std::string>& groups) {
    Prng rng = Prng::for_case(seed, case_index);
    std::vector<CheckEntry> out;
    check_cyclo_axioms(rng, out);
    check_nrd_multiplicative(rng, groups, out);
    check_wedge_scaling(rng, groups, out);
    check_gram(rng, groups, out);
    check_change_of_s(rng, out);
    check_idempotent_equivalence(rng, out);
    check_wedderburn_ring_map(rng, groups, out);
    return out;
}

std::vector<CheckEntry> distribution_case(std::uint64_t seed, unsigned case_index) {
    Prng rng = Prng::for_case(seed, case_index);
    std::vector<CheckEntry> out;
    // alternate between the two canonical towers, with and without T
    std::vector<std::uint64_t> conductors =
        case_index % 2 ? std::vector<std::uint64_t>{3, 15} : std::vector<std::uint64_t>{3, 9, 27};
    std::vector<std::uint64_t> t;
    if (rng.below(2)) t = {case_index % 2 ? (std::uint64_t)2 : (std::uint64_t)7};
    CyclotomicTower tower = CyclotomicTower::build(conductors, {}, t);
    PreEulerSystem0 sys = stickelberger_system(tower);
    DistributionReport rep = verify_distribution(sys);
    out.push_back({"distribution-relation", rep.all_ok, rep.all_ok ? "" : "exact tower"});

    // a single perturbed coordinate must be detected
    std::vector<GAElement> values;
    for (const auto& v : sys.values) values.push_back(v.coefficients);
    unsigned level = (unsigned)rng.below(values.size());
    unsigned coeff = (unsigned)rng.below(values[level].group().order());
    values[level].coeff(coeff) += Cyclo(Rat(1, 11));
    bool detected = !verify_distribution(tower, values).all_ok;
    out.push_back({"distribution-mutation-detected", detected,
                   detected ? ""
                            : "level " + std::to_string(level) + " coeff " +
                                  std::to_string(coeff)});
    return out;
}

std::vector<CheckEntry> integrality_case(std::uint64_t seed, unsigned case_index) {
    Prng rng = Prng::for_case(seed, case_index);
    std::vector<CheckEntry> out;
    static const std::uint64_t conductors[] = {3, 4, 5, 7, 8, 9, 12, 15};
    std::uint64_t f = conductors[case_index % 8];
    static const std::uint64_t odd_primes[] = {7, 11, 13, 17, 19, 23};
    std::uint64_t q = odd_primes[rng.below(6)];
    while (f % q == 0) q += 2;
    while (!is_prime_u64(q)) q += 2;
    CyclotomicData data = CyclotomicData::build(f);
    std::vector<std::uint64_t> s;
    for (auto [p, e] : factorize(f)) s.push_back(p);
    StickelbergerElement theta = stickelberger(data, s, {q});
    bool ok = admissible_t(f, {q});
    if (ok)
        for (unsigned g = 0; g < data.group.order() && ok; ++g) {
            const Cyclo& c = theta.coefficients.coeff(g);
            ok = c.is_rational() && is_integer(c.rational_value());
        }
    out.push_back({"stickelberger-integrality", ok,
                   ok ? "" : "f=" + std::to_string(f) + " q=" + std::to_string(q)});
    return out;
}

} // namespace

Json run_suite(const SuiteConfig& config) {
    std::vector<std::string> groups = config.groups;
    if (groups.empty()) groups = {"s3", "q8", "d4"};

    std::vector<std::vector<CheckEntry>> results(config.cases);
    std::atomic<unsigned> next{0};
    unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    auto work = [&]() {
        while (true) {
            unsigned i = next.fetch_add(1);
            if (i >= config.cases) break;
            if (config.suite == "identities")
                results[i] = identities_case(config.seed, i, groups);
            else if (config.suite == "distribution")
                results[i] = distribution_case(config.seed, i);
            else if (config.suite == "integrality")
                results[i] = integrality_case(config.seed, i);
            else
                fail("BadInput", "unknown suite '" + config.suite + "'");
        }
    };
    if (config.cases > 0) {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
    }

    Json checks = Json::array();
    bool all_ok = true;
    for (unsigned i = 0; i < config.cases; ++i)
        for (const auto& entry : results[i]) {
            checks.push_back(Json{{"case", i},
                                  {"name", entry.name},
                                  {"status", entry.pass ? "pass" : "fail"},
                                  {"witness", entry.witness}});
            if (!entry.pass) all_ok = false;
        }
    return Json{{"suite", config.suite},
                {"seed", config.seed},
                {"cases", config.cases},
                {"all_ok", all_ok},
                {"checks", checks}};
}

// ---------------------------------------------------------------------------
// CLI

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "BadInput", "cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item == "inf") continue;   // archimedean is implicit
        out.push_back(std::stoull(item));
    }
    return out;
}

int finish(const Json& report, const std::string& out_path, std::string& output,
           bool ok) {
    output = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << output;
    }
    return ok ? 0 : 2;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact equivariant special-value kernel"};
    app.require_subcommand(1);

    std::string group_name = "s3", s_csv, t_csv, tower_path, complex_path, in_path,
                out_path;
    std::uint64_t conductor = 3, gamma = 1, prime = 5;
    std::string prime_csv;
    std::uint64_t seed = 1;
    unsigned cases = 100, order = 1, chi_index = 0;

    auto* chartable_cmd = app.add_subcommand("chartable", "print an exact character table");
    chartable_cmd->add_option("--group", group_name);
    chartable_cmd->add_option("--out", out_path);

    auto* nrd_cmd = app.add_subcommand("nrd", "reduced norm of a matrix over a group algebra");
    nrd_cmd->add_option("--group", group_name);
    nrd_cmd->add_option("--in", in_path)->required();
    nrd_cmd->add_option("--out", out_path);

    auto* wedge_cmd = app.add_subcommand("wedge", "wedge of module elements on a free module");
    wedge_cmd->add_option("--group", group_name);
    wedge_cmd->add_option("--in", in_path)->required();
    wedge_cmd->add_option("--out", out_path);

    auto* stickel_cmd = app.add_subcommand("stickelberger", "exact Stickelberger element");
    stickel_cmd->add_option("--conductor", conductor)->required();
    stickel_cmd->add_option("--S", s_csv);
    stickel_cmd->add_option("--T", t_csv);
    stickel_cmd->add_option("--out", out_path);

    auto* idem_cmd = app.add_subcommand("idempotent", "primitive central idempotents");
    idem_cmd->add_option("--group", group_name);
    idem_cmd->add_option("--chi", chi_index);
    idem_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->require_subcommand(1);
    auto* v_ident = verify_cmd->add_subcommand("identities");
    auto* v_dist = verify_cmd->add_subcommand("distribution");
    auto* v_integ = verify_cmd->add_subcommand("integrality");
    for (auto* sub : {v_ident, v_dist, v_integ}) {
        sub->add_option("--seed", seed);
        sub->add_option("--cases", cases);
        sub->add_option("--out", out_path);
    }
    v_dist->add_option("--tower", tower_path);
    v_dist->add_option("--T", t_csv);

    auto* derive_cmd = app.add_subcommand("derive", "finite-level derivative over a product tower");
    derive_cmd->add_option("--tower", tower_path)->required();
    derive_cmd->add_option("--gamma", gamma);
    derive_cmd->add_option("--order", order);
    derive_cmd->add_option("--out", out_path);

    auto* check_cmd = app.add_subcommand("check", "single mathematical checks");
    check_cmd->require_subcommand(1);
    auto* c_prim = check_cmd->add_subcommand("primitive");
    c_prim->add_option("--complex", complex_path)->required();
    c_prim->add_option("--p", prime);
    auto* c_hsm = check_cmd->add_subcommand("hsm");
    c_hsm->add_option("--group", group_name);
    c_hsm->add_option("--in", in_path)->required();
    auto* c_ker = check_cmd->add_subcommand("kerdelta");
    c_ker->add_option("--group", group_name);
    c_ker->add_option("--in", in_path)->required();
    c_ker->add_option("--p", prime_csv);
    for (auto* sub : {c_prim, c_hsm, c_ker}) sub->add_option("--out", out_path);

    CommandResult result;
    try {
        std::vector<const char*> argv;
        argv.push_back("eqk");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse((int)argv.size(), argv.data());

        if (chartable_cmd->parsed()) {
            const auto& cat = catalog(group_name);
            result.exit_code = finish(to_json(cat.table), out_path, result.output, true);
        } else if (nrd_cmd->parsed()) {
            const auto& cat = catalog(group_name);
            GAMatrix m = ga_matrix_from_json(cat.group, read_json_file(in_path));
            result.exit_code =
                finish(to_json(reduced_norm(cat.reps, m)), out_path, result.output, true);
        } else if (wedge_cmd->parsed()) {
            const auto& cat = catalog(group_name);
            Json j = read_json_file(in_path);
            unsigned rank = j.at("rank").get<unsigned>();
            GAModule m = GAModule::free_module(cat.reps, rank);
            std::vector<std::vector<GAElement>> elements;
            for (const auto& el : j.at("elements")) {
                std::vector<GAElement> coords;
                for (const auto& c : el) coords.push_back(ga_element_from_json(cat.group, c));
                require(coords.size() == rank, "BadInput", "element coordinate count");
                elements.push_back(coords);
            }
            result.exit_code = finish(to_json(wedge_free(m, elements)), out_path,
                                      result.output, true);
        } else if (stickel_cmd->parsed()) {
            CyclotomicData data = CyclotomicData::build(conductor);
            auto s = parse_prime_list(s_csv);
            auto t = parse_prime_list(t_csv);
            StickelbergerElement theta = stickelberger(data, s, t);
            Json coeffs = Json::object();
            for (unsigned g = 0; g < data.group.order(); ++g)
                coeffs[data.group.labels()[g]] = to_json(theta.coefficients.coeff(g));
            bool integral = true;
            for (unsigned g = 0; g < data.group.order(); ++g) {
                const Cyclo& c = theta.coefficients.coeff(g);
                if (!c.is_rational() || !is_integer(c.rational_value())) integral = false;
            }
            Json out{{"conductor", conductor},
                     {"S", s},
                     {"T", t},
                     {"coefficients", coeffs},
                     {"central", to_json(theta.central)},
                     {"rational", theta.rational},
                     {"integral", integral},
                     {"admissible_T", admissible_t(conductor, t)}};
            result.exit_code = finish(out, out_path, result.output, true);
        } else if (idem_cmd->parsed()) {
            const auto& cat = catalog(group_name);
            require(chi_index < cat.table.size(), "BadInput", "character index out of range");
            GAElement e = central_idempotent(cat.table.irreducible(chi_index));
            result.exit_code = finish(to_json(e), out_path, result.output, true);
        } else if (verify_cmd->parsed()) {
            SuiteConfig config;
            config.seed = seed;
            config.cases = cases;
            if (v_ident->parsed())
                config.suite = "identities";
            else if (v_dist->parsed())
                config.suite = "distribution";
            else
                config.suite = "integrality";
            Json report;
            if (v_dist->parsed() && !tower_path.empty()) {
                Json tj = read_json_file(tower_path);
                if (!t_csv.empty()) tj["T"] = parse_prime_list(t_csv);
                CyclotomicTower tower = tower_from_json(tj);
                PreEulerSystem0 sys = stickelberger_system(tower);
                DistributionReport dist = verify_distribution(sys);
                Json checks = Json::array();
                for (const auto& pc : dist.pairs)
                    checks.push_back(
                        Json{{"name", "distribution-relation"},
                             {"status", pc.ok ? "pass" : "fail"},
                             {"witness", pc.ok ? ""
                                               : "levels " + std::to_string(pc.lower) +
                                                     "->" + std::to_string(pc.upper)}});
                report = Json{{"suite", "distribution"}, {"all_ok", dist.all_ok},
                              {"checks", checks}};
                result.exit_code = finish(report, out_path, result.output, dist.all_ok);
            } else {
                report = run_suite(config);
                result.exit_code =
                    finish(report, out_path, result.output, report.at("all_ok").get<bool>());
            }
        } else if (derive_cmd->parsed()) {
            ProductTowerInput input = product_tower_from_json(read_json_file(tower_path));
            DerivativeReport rep =
                finite_derivative(input.tower, input.values, gamma, order);
            Json levels = Json::array();
            for (const auto& lvl : rep.levels) {
                Json jl{{"divisible", lvl.divisible},
                        {"achieved_order", lvl.achieved_order}};
                if (lvl.divisible) jl["derivative"] = to_json(lvl.derivative);
                levels.push_back(jl);
            }
            Json out{{"gamma", gamma},
                     {"order", order},
                     {"all_divisible", rep.all_divisible},
                     {"stable", rep.stable},
                     {"levels", levels}};
            result.exit_code = finish(out, out_path, result.output, rep.all_divisible);
        } else if (check_cmd->parsed()) {
            if (c_prim->parsed()) {
                Json j = read_json_file(complex_path);
                FiniteGroup g = group_from_json(j.at("group"));
                const CatalogEntry* cat = nullptr;
                if (j.at("group").is_string()) cat = &catalog(j.at("group").get<std::string>());
                CharacterTable table = cat ? cat->table : CharacterTable::compute(g);
                RepSet reps = cat ? cat->reps : RepSet::build(table);
                GAMatrix phi = ga_matrix_from_json(cat ? cat->group : g, j.at("phi"));
                TwoTermComplex c = TwoTermComplex::make(reps, phi, {prime});
                GradedLine standard =
                    upsilon_basis(c, GAMatrix::identity(c.phi.group(), c.rank),
                                  GAMatrix::identity(c.phi.group(), c.rank));
                GradedLine given = standard;
                if (j.contains("basis0") || j.contains("basis1")) {
                    GAMatrix b0 = j.contains("basis0")
                                      ? ga_matrix_from_json(c.phi.group(), j.at("basis0"))
                                      : GAMatrix::identity(c.phi.group(), c.rank);
                    GAMatrix b1 = j.contains("basis1")
                                      ? ga_matrix_from_json(c.phi.group(), j.at("basis1"))
                                      : GAMatrix::identity(c.phi.group(), c.rank);
                    given = upsilon_basis(c, b0, b1);
                }
                bool equiv = primitive_equiv(standard, given, prime);
                Json out{{"checks",
                          Json::array({Json{{"name", "primitive-basis-equivalence"},
                                            {"status", equiv ? "pass" : "fail"},
                                            {"witness", ""}}})}};
                result.exit_code = finish(out, out_path, result.output, equiv);
            } else if (c_hsm->parsed()) {
                const auto& cat = catalog(group_name);
                Json j = read_json_file(in_path);
                std::vector<Cyclo> coords;
                for (const auto& c : j.at("coords")) coords.push_back(cyclo_from_json(c));
                CentralElement x(cat.table, std::move(coords));
                bool ok = hsm_membership(x);
                Json out{{"checks",
                          Json::array({Json{{"name", "symplectic-positivity"},
                                            {"status", ok ? "pass" : "fail"},
                                            {"witness", ""}}})}};
                result.exit_code = finish(out, out_path, result.output, ok);
            } else {
                const auto& cat = catalog(group_name);
                Json j = read_json_file(in_path);
                std::vector<Cyclo> coords;
                for (const auto& c : j.at("coords")) coords.push_back(cyclo_from_json(c));
                CentralElement x(cat.table, std::move(coords));
                auto primes = parse_prime_list(prime_csv.empty() ? "5" : prime_csv);
                bool ok = ker_delta_test(x, primes);
                Json out{{"checks",
                          Json::array({Json{{"name", "boundary-kernel-units"},
                                            {"status", ok ? "pass" : "fail"},
                                            {"witness", ""}}})}};
                result.exit_code = finish(out, out_path, result.output, ok);
            }
        }
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.output = std::string("error: ") + e.what() + "\n";
    } catch (const Error& e) {
        bool math = std::string(e.kind()) == "RelationViolation" ||
                    std::string(e.kind()) == "EquivalenceViolation";
        result.exit_code = math ? 2 : 1;
        result.output = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.output = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace eqk
