#include "eqk/rep.hpp"

#include <algorithm>
#include <mutex>

namespace eqk {

CycloMatrix cyclo_identity(unsigned n) {
    CycloMatrix m(n, std::vector<Cyclo>(n));
    for (unsigned i = 0; i < n; ++i) m[i][i] = Cyclo::one();
    return m;
}

CycloMatrix cyclo_mat_mul(const CycloMatrix& a, const CycloMatrix& b) {
    unsigned n = (unsigned)a.size(), k = (unsigned)b.size(), m = (unsigned)b[0].size();
    CycloMatrix c(n, std::vector<Cyclo>(m));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (unsigned j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    return c;
}

Cyclo cyclo_mat_det(CycloMatrix m) {
    unsigned n = (unsigned)m.size();
    Cyclo det = Cyclo::one();
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Cyclo::zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Cyclo inv = m[col][col].inverse();
        for (unsigned r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Cyclo f = m[r][col] * inv;
            for (unsigned c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Cyclo cyclo_mat_trace(const CycloMatrix& m) {
    Cyclo t;
    for (unsigned i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

IrredRep rep_for_linear(const CharacterTable& t, unsigned char_index) {
    const Character& chi = t.irreducible(char_index);
    require(chi.degree == 1, "NotLinear", "character has degree > 1");
    IrredRep rep;
    rep.group = t.group();
    rep.char_index = char_index;
    rep.degree = 1;
    rep.matrices.resize(t.group().order());
    for (unsigned g = 0; g < t.group().order(); ++g)
        rep.matrices[g] = {{chi.at_element(g)}};
    return rep;
}

MonomialInduction monomial_induce(const CharacterTable& table_of_g,
                                  const EmbeddedSubgroup& h,
                                  const std::vector<Cyclo>& lambda_on_h,
                                  const std::vector<unsigned>& transversal) {
    const FiniteGroup& g = table_of_g.group();
    require(h.parent.same_as(g), "NotSubgroup", "subgroup of a different group");
    require(lambda_on_h.size() == h.group.order(), "BadInput", "character length mismatch");
    unsigned m = (unsigned)transversal.size();
    require((std::size_t)m * h.group.order() == g.order(), "BadTransversal",
            "transversal size does not match the index");

    std::vector<unsigned> local_index(g.order(), UINT32_MAX);
    for (unsigned i = 0; i < h.to_parent.size(); ++i) local_index[h.to_parent[i]] = i;
    // each group element must factor uniquely as t_i * h
    std::vector<bool> covered(g.order(), false);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned x = 0; x < h.group.order(); ++x) {
            unsigned y = g.mul(transversal[i], h.to_parent[x]);
            require(!covered[y], "BadTransversal", "cosets overlap");
            covered[y] = true;
        }

    MonomialInduction out;
    IrredRep& rep = out.rep;
    rep.group = g;
    rep.degree = m;
    rep.matrices.assign(g.order(), CycloMatrix(m, std::vector<Cyclo>(m)));
    for (unsigned x = 0; x < g.order(); ++x)
        for (unsigned j = 0; j < m; ++j) {
            unsigned target = g.mul(x, transversal[j]);
            for (unsigned i = 0; i < m; ++i) {
                unsigned c = g.mul(g.inverse(transversal[i]), target);
                if (local_index[c] != UINT32_MAX) {
                    rep.matrices[x][i][j] = lambda_on_h[local_index[c]];
                    break;
                }
            }
        }

    // irreducible iff the induced character has norm one
    ClassFunction induced(g.num_classes());
    for (unsigned cls = 0; cls < g.num_classes(); ++cls) {
        unsigned repel = g.conjugacy_classes()[cls][0];
        induced[cls] = cyclo_mat_trace(rep.matrices[repel]);
    }
    out.irreducible = class_function_inner(g, induced, induced) == Cyclo::one();
    if (out.irreducible) {
        for (unsigned i = 0; i < table_of_g.size(); ++i)
            if (table_of_g.irreducible(i).values == induced) {
                rep.char_index = i;
                break;
            }
    }
    return out;
}

bool verify_rep(const IrredRep& rep, const CharacterTable& t) {
    const FiniteGroup& g = rep.group;
    if (rep.matrices.size() != g.order()) return false;
    const Character& chi = t.irreducible(rep.char_index);
    if (chi.degree != rep.degree) return false;
    if (!(rep.at(g.identity()) == cyclo_identity(rep.degree))) return false;
    for (unsigned x = 0; x < g.order(); ++x) {
        if (rep.at(x).size() != rep.degree) return false;
        if (cyclo_mat_trace(rep.at(x)) != chi.at_element(x)) return false;
        for (unsigned y = 0; y < g.order(); ++y)
            if (!(cyclo_mat_mul(rep.at(x), rep.at(y)) == rep.at(g.mul(x, y))))
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// RepSet

struct RepSet::Data {
    CharacterTable table;
    std::vector<IrredRep> reps;
};

const CharacterTable& RepSet::table() const { return d_->table; }

const IrredRep& RepSet::rep(unsigned char_index) const { return d_->reps[char_index]; }

namespace {

IrredRep galois_twist(const IrredRep& rep, std::uint64_t a, unsigned new_index) {
    IrredRep out = rep;
    out.char_index = new_index;
    for (auto& mat : out.matrices)
        for (auto& row : mat)
            for (auto& v : row) {
                std::uint64_t nc = v.conductor();
                if (nc > 1) v = v.galois(a % nc);
            }
    return out;
}

} // namespace

RepSet RepSet::build(const CharacterTable& t,
                     const std::map<unsigned, std::vector<CycloMatrix>>& user_reps) {
    const FiniteGroup& g = t.group();
    unsigned e = g.exponent();
    std::vector<std::optional<IrredRep>> reps(t.size());

    std::vector<bool> placed(t.size(), false);
    for (unsigned i = 0; i < t.size(); ++i) {
        if (placed[i]) continue;
        const Character& chi = t.irreducible(i);
        IrredRep base;
        if (auto it = user_reps.find(i); it != user_reps.end()) {
            base.group = g;
            base.char_index = i;
            base.degree = chi.degree;
            base.matrices = it->second;
            require(verify_rep(base, t), "MissingRep",
                    "supplied matrices fail the representation checks");
        } else if (chi.degree == 1) {
            base = rep_for_linear(t, i);
        } else {
            // deterministic monomial search over subgroups of the right index
            bool found = false;
            for (const auto& sub : all_subgroups(g)) {
                if (found) break;
                if (sub.order() * chi.degree != g.order()) continue;
                EmbeddedSubgroup h = materialize(sub);
                CharacterTable ht = CharacterTable::compute(h.group);
                auto transversal = sub.left_transversal();
                for (unsigned li = 0; li < ht.size() && !found; ++li) {
                    if (ht.irreducible(li).degree != 1) continue;
                    std::vector<Cyclo> lambda(h.group.order());
                    for (unsigned x = 0; x < h.group.order(); ++x)
                        lambda[x] = ht.irreducible(li).at_element(x);
                    auto ind = monomial_induce(t, h, lambda, transversal);
                    if (ind.irreducible && ind.rep.char_index == i) {
                        base = ind.rep;
                        found = true;
                    }
                }
            }
            require(found, "MissingRep",
                    "no monomial realization; supply matrices for character " +
                        std::to_string(i));
        }
        reps[i] = base;
        placed[i] = true;
        // twist to the rest of the Galois orbit (smallest twist exponent wins)
        for (std::uint64_t a = 2; a < e; ++a) {
            if (gcd_u64(a, e) != 1) continue;
            unsigned j = t.galois_conjugate(i, a);
            if (placed[j]) continue;
            reps[j] = galois_twist(base, a, j);
            placed[j] = true;
        }
    }

    auto data = std::make_shared<Data>();
    data->table = t;
    for (auto& r : reps) data->reps.push_back(std::move(*r));
    RepSet rs;
    rs.d_ = std::move(data);
    return rs;
}

CycloMatrix RepSet::apply(unsigned char_index, const GAElement& x) const {
    require(x.group().same_as(group()), "BadInput", "element of a different group");
    const IrredRep& rep = d_->reps[char_index];
    CycloMatrix acc(rep.degree, std::vector<Cyclo>(rep.degree));
    for (unsigned g = 0; g < x.group().order(); ++g) {
        if (x.coeff(g).is_zero()) continue;
        for (unsigned i = 0; i < rep.degree; ++i)
            for (unsigned j = 0; j < rep.degree; ++j) {
                if (rep.at(g)[i][j].is_zero()) continue;
                acc[i][j] += x.coeff(g) * rep.at(g)[i][j];
            }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// catalog

const CatalogEntry& catalog(const std::string& name) {
    static std::map<std::string, CatalogEntry>* entries = new std::map<std::string, CatalogEntry>();
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = entries->find(name);
    if (it != entries->end()) return it->second;

    FiniteGroup g;
    if (name.size() >= 2 && name[0] == 'c' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        g = FiniteGroup::cyclic((unsigned)std::stoul(name.substr(1)));
    } else if (name == "v4") {
        g = FiniteGroup::from_invariant_factors({2, 2});
    } else if (name == "s3") {
        g = FiniteGroup::symmetric(3);
    } else if (name == "d4") {
        g = FiniteGroup::dihedral(4);
    } else if (name == "q8") {
        g = FiniteGroup::quaternion8();
    } else if (name == "a4") {
        g = FiniteGroup::alternating4();
    } else if (name == "s4") {
        g = FiniteGroup::symmetric(4);
    } else if (name == "d5") {
        g = FiniteGroup::dihedral(5);
    } else {
        fail("UnknownGroup", "no catalog group named '" + name + "'");
    }
    CatalogEntry entry;
    entry.name = name;
    entry.group = g;
    entry.table = CharacterTable::compute(g);
    entry.reps = RepSet::build(entry.table);
    return (*entries)[name] = std::move(entry);
}

std::vector<std::string> catalog_names() {
    return {"c2", "c3", "c4", "v4", "s3", "c6", "d4", "q8", "a4", "s4", "d5"};
}

} // namespace eqk
