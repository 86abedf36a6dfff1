#include "eqk/json_io.hpp"

namespace eqk {

Json to_json(const Cyclo& x) {
    Cyclo m = x.minimized();
    Json coeffs = Json::array();
    for (const auto& q : m.coeffs()) coeffs.push_back(rat_to_string(q));
    return Json{{"conductor", m.conductor()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const Json& j) {
    if (j.is_string()) return Cyclo(parse_rat(j.get<std::string>()));
    if (j.is_number_integer()) return Cyclo(Rat(j.get<long>()));
    require(j.contains("conductor") && j.contains("coeffs"), "BadInput",
            "cyclotomic value needs conductor and coeffs");
    std::vector<Rat> coeffs;
    for (const auto& s : j.at("coeffs"))
        coeffs.push_back(s.is_string() ? parse_rat(s.get<std::string>())
                                       : Rat(s.get<long>()));
    return Cyclo(j.at("conductor").get<std::uint64_t>(), std::move(coeffs));
}

Json to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (const auto& row : g.table()) table.push_back(row);
    return Json{{"order", g.order()}, {"table", table}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const Json& j) {
    if (j.is_string()) return catalog(j.get<std::string>()).group;
    if (j.contains("name")) return catalog(j.at("name").get<std::string>()).group;
    if (j.contains("perm_gens"))
        return FiniteGroup::from_permutations(
            j.at("perm_gens").get<std::vector<std::vector<unsigned>>>());
    if (j.contains("invariant_factors"))
        return FiniteGroup::from_invariant_factors(
            j.at("invariant_factors").get<std::vector<unsigned>>());
    require(j.contains("table"), "BadInput", "no group description found");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<unsigned>>>(),
                                   labels);
}

Json to_json(const GAElement& x) {
    Json out = Json::object();
    for (unsigned g = 0; g < x.group().order(); ++g)
        if (!x.coeff(g).is_zero()) out[std::to_string(g)] = to_json(x.coeff(g));
    return out;
}

GAElement ga_element_from_json(const FiniteGroup& g, const Json& j) {
    GAElement x(g);
    for (auto it = j.begin(); it != j.end(); ++it) {
        unsigned idx = (unsigned)std::stoul(it.key());
        require(idx < g.order(), "BadInput", "element index out of range");
        x.coeff(idx) = cyclo_from_json(it.value());
    }
    return x;
}

Json to_json(const GAMatrix& m) {
    Json entries = Json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (unsigned c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(i, c)));
        entries.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

GAMatrix ga_matrix_from_json(const FiniteGroup& g, const Json& j) {
    unsigned rows = j.at("rows").get<unsigned>();
    unsigned cols = j.at("cols").get<unsigned>();
    GAMatrix m(g, rows, cols);
    const Json& entries = j.at("entries");
    require(entries.size() == rows, "BadInput", "entry row count mismatch");
    for (unsigned i = 0; i < rows; ++i) {
        require(entries[i].size() == cols, "BadInput", "entry column count mismatch");
        for (unsigned c = 0; c < cols; ++c)
            m.at(i, c) = ga_element_from_json(g, entries[i][c]);
    }
    return m;
}

Json to_json(const CharacterTable& t) {
    const FiniteGroup& g = t.group();
    Json classes = Json::array();
    for (const auto& cls : g.conjugacy_classes()) classes.push_back(cls);
    Json irreducibles = Json::array();
    for (const auto& chi : t.irreducibles()) {
        Json values = Json::array();
        for (const auto& v : chi.values) values.push_back(to_json(v));
        irreducibles.push_back(Json{{"degree", chi.degree}, {"values", values}});
    }
    return Json{{"order", g.order()}, {"classes", classes}, {"irreducibles", irreducibles}};
}

Json rep_bundle_to_json(const RepSet& reps, unsigned char_index) {
    const IrredRep& rep = reps.rep(char_index);
    Json matrices = Json::object();
    for (unsigned g = 0; g < rep.group.order(); ++g) {
        Json mat = Json::array();
        for (const auto& row : rep.at(g)) {
            Json jr = Json::array();
            for (const auto& v : row) jr.push_back(to_json(v));
            mat.push_back(jr);
        }
        matrices[std::to_string(g)] = mat;
    }
    return Json{{"group", to_json(rep.group)},
                {"char_index", char_index},
                {"matrices", matrices}};
}

Json to_json(const CentralElement& z) {
    Json coords = Json::array();
    for (const auto& c : z.coords()) coords.push_back(to_json(c));
    return Json{{"coords", coords}};
}

Json to_json(const GaloisSetup& s) {
    Json places = Json::array();
    for (const auto& p : s.places) {
        Json jp{{"label", p.label}, {"arch", p.archimedean},
                {"decomp", p.decomposition.elements}};
        if (!p.archimedean) {
            jp["frob"] = p.frobenius;
            jp["norm"] = p.norm;
        }
        places.push_back(jp);
    }
    return Json{{"group", to_json(s.group)}, {"places", places}};
}

GaloisSetup setup_from_json(const Json& j) {
    GaloisSetup s;
    s.group = group_from_json(j.at("group"));
    s.table = CharacterTable::compute(s.group);
    for (const auto& jp : j.at("places")) {
        Place p;
        p.label = jp.at("label").get<std::string>();
        p.archimedean = jp.value("arch", false);
        p.decomposition =
            Subgroup::generated(s.group, jp.at("decomp").get<std::vector<unsigned>>());
        if (!p.archimedean) {
            p.frobenius = jp.at("frob").get<unsigned>();
            p.norm = jp.at("norm").get<std::uint64_t>();
        } else {
            p.frobenius = s.group.identity();
        }
        s.places.push_back(std::move(p));
    }
    s.validate();
    return s;
}

Json to_json(const WedgeElement& w) {
    Json blocks = Json::array();
    for (unsigned chi = 0; chi < w.module().reps().table().size(); ++chi) {
        Json coords = Json::array();
        for (const auto& v : w.coords(chi)) coords.push_back(to_json(v));
        blocks.push_back(coords);
    }
    return Json{{"degree", w.degree()}, {"blocks", blocks}};
}

CyclotomicTower tower_from_json(const Json& j) {
    std::vector<std::uint64_t> conductors =
        j.at("conductors").get<std::vector<std::uint64_t>>();
    std::vector<std::vector<std::uint64_t>> extra_s;
    if (j.contains("extra_S"))
        extra_s = j.at("extra_S").get<std::vector<std::vector<std::uint64_t>>>();
    std::vector<std::uint64_t> t;
    if (j.contains("T")) t = j.at("T").get<std::vector<std::uint64_t>>();
    return CyclotomicTower::build(conductors, extra_s, t);
}

ProductTowerInput product_tower_from_json(const Json& j) {
    ProductTowerInput input;
    FiniteGroup delta = group_from_json(j.at("delta"));
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned depth = j.at("depth").get<unsigned>();
    input.tower = ProductTower::make(delta, p, depth);
    if (j.contains("family")) {
        const Json& fam = j.at("family");
        GAElement base = ga_element_from_json(delta, fam.at("base"));
        unsigned order = fam.at("order").get<unsigned>();
        std::uint64_t gamma = fam.value("gamma", (std::uint64_t)1);
        for (unsigned n = 1; n <= depth; ++n)
            input.values.push_back(
                inflated_power_family(input.tower, n, base, gamma, order));
    } else {
        const Json& values = j.at("values");
        require(values.size() == depth, "BadInput", "one value per level");
        for (unsigned n = 1; n <= depth; ++n) {
            std::uint64_t q = input.tower.level_order(n);
            require(values[n - 1].size() == q, "BadInput",
                    "level value has the wrong length");
            ProductValue v;
            for (std::uint64_t i = 0; i < q; ++i)
                v.push_back(ga_element_from_json(delta, values[n - 1][i]));
            input.values.push_back(std::move(v));
        }
    }
    return input;
}

} // namespace eqk
