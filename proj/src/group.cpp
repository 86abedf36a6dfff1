#include "eqk/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "eqk/rational.hpp"

namespace eqk {

namespace {
std::atomic<unsigned> g_max_order{0};
}

unsigned max_group_order() {
    unsigned v = g_max_order.load();
    if (v) return v;
    if (const char* env = std::getenv("EQK_MAX_GROUP_ORDER")) {
        int parsed = std::atoi(env);
        if (parsed > 0) {
            g_max_order.store((unsigned)parsed);
            return (unsigned)parsed;
        }
    }
    g_max_order.store(64);
    return 64;
}

void set_max_group_order(unsigned cap) { g_max_order.store(cap); }

struct FiniteGroup::Data {
    unsigned order = 0;
    unsigned identity = 0;
    std::vector<std::vector<unsigned>> table;
    std::vector<unsigned> inverse;
    std::vector<std::string> labels;
    std::vector<std::vector<unsigned>> classes;
    std::vector<unsigned> class_of;
};

namespace detail {

std::shared_ptr<const FiniteGroup::Data> build_data(
    std::vector<std::vector<unsigned>> table, std::vector<std::string> labels) {
    auto d = std::make_shared<FiniteGroup::Data>();
    d->table = std::move(table);
    d->labels = std::move(labels);
    unsigned n = d->order = (unsigned)d->table.size();
    require(n > 0, "NotAGroup", "empty table");
    require(n <= max_group_order(),
            "GroupTooLarge", "order " + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(max_group_order()));
    for (const auto& row : d->table) {
        require(row.size() == n, "NotAGroup", "table is not square");
        for (unsigned v : row) require(v < n, "NotAGroup", "table entry out of range");
    }
    bool found = false;
    for (unsigned e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (unsigned g = 0; g < n && ok; ++g)
            ok = d->table[e][g] == g && d->table[g][e] == g;
        if (ok) {
            d->identity = e;
            found = true;
        }
    }
    require(found, "NotAGroup", "no two-sided identity");
    d->inverse.assign(n, n);
    for (unsigned g = 0; g < n; ++g) {
        for (unsigned h = 0; h < n; ++h)
            if (d->table[g][h] == d->identity && d->table[h][g] == d->identity) {
                d->inverse[g] = h;
                break;
            }
        require(d->inverse[g] < n, "NotAGroup",
                "element " + std::to_string(g) + " has no inverse");
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                require(d->table[d->table[a][b]][c] == d->table[a][d->table[b][c]],
                        "NotAGroup", "associativity fails");
    if (d->labels.empty()) {
        d->labels.resize(n);
        for (unsigned g = 0; g < n; ++g) d->labels[g] = "g" + std::to_string(g);
    }
    require(d->labels.size() == n, "NotAGroup", "label count mismatch");

    // conjugacy classes sorted by (size, least element), identity class first
    d->class_of.assign(n, n);
    for (unsigned g = 0; g < n; ++g) {
        if (d->class_of[g] != n) continue;
        std::set<unsigned> cls;
        for (unsigned x = 0; x < n; ++x)
            cls.insert(d->table[d->table[x][g]][d->inverse[x]]);
        std::vector<unsigned> v(cls.begin(), cls.end());
        unsigned idx = (unsigned)d->classes.size();
        for (unsigned h : v) d->class_of[h] = idx;
        d->classes.push_back(std::move(v));
    }
    std::vector<unsigned> perm(d->classes.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::stable_sort(perm.begin(), perm.end(), [&](unsigned a, unsigned b) {
        if (d->classes[a].size() != d->classes[b].size())
            return d->classes[a].size() < d->classes[b].size();
        return d->classes[a][0] < d->classes[b][0];
    });
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (d->classes[perm[i]][0] == d->identity) {
            std::rotate(perm.begin(), perm.begin() + i, perm.begin() + i + 1);
            break;
        }
    std::vector<std::vector<unsigned>> sorted;
    for (unsigned p : perm) sorted.push_back(std::move(d->classes[p]));
    d->classes = std::move(sorted);
    for (unsigned i = 0; i < d->classes.size(); ++i)
        for (unsigned h : d->classes[i]) d->class_of[h] = i;
    return d;
}

} // namespace detail

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<unsigned>> table,
                                    std::vector<std::string> labels) {
    return FiniteGroup(detail::build_data(std::move(table), std::move(labels)));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<unsigned>>& gens) {
    require(!gens.empty(), "NotAGroup", "no generators");
    std::size_t m = gens[0].size();
    for (const auto& p : gens) {
        require(p.size() == m, "NotAGroup", "generator degrees differ");
        std::vector<bool> seen(m, false);
        for (unsigned v : p) {
            require(v < m && !seen[v], "NotAGroup", "generator is not a permutation");
            seen[v] = true;
        }
    }
    std::vector<unsigned> id(m);
    std::iota(id.begin(), id.end(), 0u);
    std::map<std::vector<unsigned>, unsigned> index;
    std::vector<std::vector<unsigned>> elems{id};
    index[id] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : gens) {
            std::vector<unsigned> prod(m);
            for (std::size_t x = 0; x < m; ++x) prod[x] = gen[elems[i][x]];
            if (!index.count(prod)) {
                require(elems.size() < max_group_order(), "GroupTooLarge",
                        "closure exceeds the group-order cap");
                index[prod] = (unsigned)elems.size();
                elems.push_back(prod);
            }
        }
    }
    unsigned n = (unsigned)elems.size();
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            std::vector<unsigned> prod(m);
            for (std::size_t x = 0; x < m; ++x) prod[x] = elems[a][elems[b][x]];
            table[a][b] = index.at(prod);
        }
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::from_invariant_factors(const std::vector<unsigned>& factors) {
    require(!factors.empty(), "NotAGroup", "no invariant factors");
    unsigned n = 1;
    for (unsigned d : factors) {
        require(d >= 1, "NotAGroup", "invariant factor must be positive");
        n *= d;
    }
    auto decode = [&](unsigned idx) {
        std::vector<unsigned> t(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            t[i] = idx % factors[i];
            idx /= factors[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<unsigned>& t) {
        unsigned idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + t[i];
        return idx;
    };
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            auto ta = decode(a), tb = decode(b);
            for (std::size_t i = 0; i < factors.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors[i];
            table[a][b] = encode(ta);
        }
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::cyclic(unsigned n) { return from_invariant_factors({n}); }

FiniteGroup FiniteGroup::dihedral(unsigned n) {
    std::vector<unsigned> r(n), s(n);
    for (unsigned i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    return from_permutations({r, s});
}

FiniteGroup FiniteGroup::quaternion8() {
    auto neg = [](unsigned x) { return x ^ 1u; };
    std::vector<std::vector<unsigned>> table(8, std::vector<unsigned>(8));
    auto base_mul = [&](unsigned a, unsigned b) -> unsigned {
        static const unsigned tab[4][4] = {
            {0, 2, 4, 6},
            {2, 1, 6, 5},
            {4, 7, 1, 2},
            {6, 4, 3, 1},
        };
        return tab[a / 2][b / 2];
    };
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            unsigned p = base_mul(a & ~1u, b & ~1u);
            if ((a & 1u) ^ (b & 1u)) p = neg(p);
            table[a][b] = p;
        }
    return from_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::symmetric(unsigned n) {
    require(n >= 1 && n <= 5, "NotAGroup", "symmetric(n) supports n <= 5");
    if (n == 1) return cyclic(1);
    std::vector<unsigned> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0u);
    std::swap(transposition[0], transposition[1]);
    for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return from_permutations({transposition, cycle});
}

FiniteGroup FiniteGroup::alternating4() {
    return from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    unsigned n = a.order() * b.order();
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    auto enc = [&](unsigned x, unsigned y) { return x * b.order() + y; };
    for (unsigned x1 = 0; x1 < a.order(); ++x1)
        for (unsigned y1 = 0; y1 < b.order(); ++y1)
            for (unsigned x2 = 0; x2 < a.order(); ++x2)
                for (unsigned y2 = 0; y2 < b.order(); ++y2)
                    table[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return from_table(std::move(table));
}

unsigned FiniteGroup::order() const { return d_->order; }
unsigned FiniteGroup::identity() const { return d_->identity; }
unsigned FiniteGroup::mul(unsigned a, unsigned b) const { return d_->table[a][b]; }
unsigned FiniteGroup::inverse(unsigned a) const { return d_->inverse[a]; }
unsigned FiniteGroup::conjugate(unsigned g, unsigned x) const {
    return mul(mul(g, x), inverse(g));
}
const std::vector<std::string>& FiniteGroup::labels() const { return d_->labels; }
const std::vector<std::vector<unsigned>>& FiniteGroup::table() const { return d_->table; }
const std::vector<std::vector<unsigned>>& FiniteGroup::conjugacy_classes() const {
    return d_->classes;
}
unsigned FiniteGroup::class_of(unsigned g) const { return d_->class_of[g]; }

unsigned FiniteGroup::element_order(unsigned g) const {
    unsigned o = 1, x = g;
    while (x != d_->identity) {
        x = mul(x, g);
        ++o;
    }
    return o;
}

unsigned FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (unsigned g = 0; g < d_->order; ++g) e = lcm_u64(e, element_order(g));
    return (unsigned)e;
}

bool FiniteGroup::is_abelian() const {
    for (unsigned a = 0; a < d_->order; ++a)
        for (unsigned b = a + 1; b < d_->order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

unsigned FiniteGroup::class_of_power(unsigned class_index, std::uint64_t t) const {
    unsigned rep = d_->classes[class_index][0];
    unsigned x = d_->identity;
    for (std::uint64_t i = 0; i < t % element_order(rep); ++i) x = mul(x, rep);
    return d_->class_of[x];
}

unsigned FiniteGroup::inverse_class(unsigned class_index) const {
    return d_->class_of[d_->inverse[d_->classes[class_index][0]]];
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::generated(const FiniteGroup& g, const std::vector<unsigned>& gens) {
    std::set<unsigned> elems{g.identity()};
    std::vector<unsigned> work{g.identity()};
    for (std::size_t i = 0; i < work.size(); ++i)
        for (unsigned gen : gens) {
            for (unsigned x : {g.mul(work[i], gen), g.mul(work[i], g.inverse(gen))})
                if (elems.insert(x).second) work.push_back(x);
        }
    Subgroup h;
    h.parent = g;
    h.elements.assign(elems.begin(), elems.end());
    return h;
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return generated(g, {}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
    Subgroup h;
    h.parent = g;
    h.elements.resize(g.order());
    std::iota(h.elements.begin(), h.elements.end(), 0u);
    return h;
}

bool Subgroup::contains(unsigned g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_normal() const {
    for (unsigned g = 0; g < parent.order(); ++g)
        for (unsigned h : elements)
            if (!contains(parent.conjugate(g, h))) return false;
    return true;
}

bool Subgroup::is_cyclic() const {
    for (unsigned h : elements)
        if (parent.element_order(h) == elements.size()) return true;
    return false;
}

std::vector<unsigned> Subgroup::left_transversal() const {
    std::vector<bool> seen(parent.order(), false);
    std::vector<unsigned> reps;
    for (unsigned g = 0; g < parent.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (unsigned h : elements) seen[parent.mul(g, h)] = true;
    }
    return reps;
}

// ---------------------------------------------------------------------------
// GroupHom and quotient

GroupHom::GroupHom(const FiniteGroup& s, const FiniteGroup& t, std::vector<unsigned> im)
    : source(s), target(t), images(std::move(im)) {
    require(images.size() == s.order(), "NotAHom", "image vector has wrong length");
    for (unsigned v : images) require(v < t.order(), "NotAHom", "image out of range");
    for (unsigned a = 0; a < s.order(); ++a)
        for (unsigned b = 0; b < s.order(); ++b)
            require(images[s.mul(a, b)] == t.mul(images[a], images[b]),
                    "NotAHom", "map does not respect multiplication");
}

bool GroupHom::is_surjective() const {
    std::set<unsigned> im(images.begin(), images.end());
    return im.size() == target.order();
}

std::vector<unsigned> GroupHom::kernel() const {
    std::vector<unsigned> k;
    for (unsigned g = 0; g < source.order(); ++g)
        if (images[g] == target.identity()) k.push_back(g);
    return k;
}

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n) {
    require(n.parent.same_as(g), "NotNormal", "subgroup belongs to a different group");
    require(n.is_normal(), "NotNormal", "subgroup is not normal");
    std::vector<unsigned> coset_of(g.order(), UINT32_MAX);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned x = 0; x < g.order(); ++x) {
        if (coset_of[x] != UINT32_MAX) continue;
        std::set<unsigned> cs;
        for (unsigned h : n.elements) cs.insert(g.mul(x, h));
        unsigned idx = (unsigned)cosets.size();
        for (unsigned y : cs) coset_of[y] = idx;
        cosets.emplace_back(cs.begin(), cs.end());
    }
    unsigned idc = coset_of[g.identity()];
    if (idc != 0) {
        std::swap(cosets[0], cosets[idc]);
        for (unsigned x = 0; x < g.order(); ++x) {
            if (coset_of[x] == idc)
                coset_of[x] = 0;
            else if (coset_of[x] == 0)
                coset_of[x] = idc;
        }
    }
    unsigned q = (unsigned)cosets.size();
    std::vector<std::vector<unsigned>> table(q, std::vector<unsigned>(q));
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            table[a][b] = coset_of[g.mul(cosets[a][0], cosets[b][0])];
    FiniteGroup quo = FiniteGroup::from_table(std::move(table));
    GroupHom pi(g, quo, std::vector<unsigned>(coset_of.begin(), coset_of.end()));
    return {quo, pi};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<unsigned>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> work{Subgroup::trivial(g)};
    seen.insert(work[0].elements);
    for (std::size_t i = 0; i < work.size(); ++i) {
        Subgroup cur = work[i];
        out.push_back(cur);
        for (unsigned x = 0; x < g.order(); ++x) {
            if (cur.contains(x)) continue;
            std::vector<unsigned> gens = cur.elements;
            gens.push_back(x);
            Subgroup bigger = Subgroup::generated(g, gens);
            if (seen.insert(bigger.elements).second) work.push_back(bigger);
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

} // namespace eqk
