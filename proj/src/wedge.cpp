#include "eqk/wedge.hpp"

#include <algorithm>

namespace eqk {

// ---------------------------------------------------------------------------
// reduced norms

CentralElement reduced_norm(const RepSet& reps, const GAMatrix& m) {
    require(m.rows() == m.cols(), "BadInput", "reduced norm needs a square matrix");
    require(m.group().same_as(reps.group()), "BadInput", "matrix over a different group");
    const CharacterTable& t = reps.table();
    std::vector<Cyclo> coords(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi) {
        unsigned deg = t.irreducible(chi).degree;
        unsigned big = m.rows() * deg;
        CycloMatrix block(big, std::vector<Cyclo>(big));
        for (unsigned i = 0; i < m.rows(); ++i)
            for (unsigned j = 0; j < m.rows(); ++j) {
                CycloMatrix cell = reps.apply(chi, m.at(i, j));
                for (unsigned a = 0; a < deg; ++a)
                    for (unsigned b = 0; b < deg; ++b)
                        block[i * deg + a][j * deg + b] = std::move(cell[a][b]);
            }
        coords[chi] = cyclo_mat_det(std::move(block));
    }
    return CentralElement(t, std::move(coords));
}

CentralElement reduced_norm_op(const RepSet& reps, const GAMatrix& m) {
    return reduced_norm(reps, m.transpose());
}

// ---------------------------------------------------------------------------
// subset bookkeeping

std::vector<std::vector<unsigned>> sorted_subsets(unsigned m, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > m) return out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = (int)k - 1;
        while (i >= 0 && cur[i] == m - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (unsigned j = (unsigned)i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

unsigned subset_position(unsigned m, const std::vector<unsigned>& subset) {
    unsigned k = (unsigned)subset.size();
    unsigned rank = 0;
    unsigned prev = 0;
    auto choose = [](unsigned n, unsigned r) -> unsigned {
        if (r > n) return 0;
        unsigned long long c = 1;
        for (unsigned i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
        return (unsigned)c;
    };
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned v = prev; v < subset[i]; ++v) rank += choose(m - v - 1, k - i - 1);
        prev = subset[i] + 1;
    }
    return rank;
}

namespace {

// sign of sorting the concatenation of two disjoint sorted index sets
int merge_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned inv = 0;
    for (unsigned x : a)
        for (unsigned y : b)
            if (x > y) ++inv;
    return inv % 2 ? -1 : 1;
}

// Pluecker coordinates: minors of a (D x m) matrix over all D-subsets of
// columns, in lexicographic order
std::vector<Cyclo> all_maximal_minors(const CycloMatrix& rows, unsigned m) {
    unsigned d = (unsigned)rows.size();
    std::vector<Cyclo> out;
    for (const auto& cols : sorted_subsets(m, d)) {
        CycloMatrix sq(d, std::vector<Cyclo>(d));
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) sq[i][j] = rows[i][cols[j]];
        out.push_back(cyclo_mat_det(std::move(sq)));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// GAModule

struct GAModule::Data {
    RepSet reps;
    unsigned dim = 0;
    std::optional<unsigned> rank;              // free modules
    std::vector<CycloMatrix> action;           // explicit modules only
    struct ChiData {
        std::vector<GAElement> u_row;          // u_{1j}, j = 0..deg-1
        unsigned mult = 0;
        CycloMatrix basis;                     // N x mult, columns span W
        std::vector<unsigned> pivot_rows;
        CycloMatrix solver;                    // inverse of basis[pivot_rows]
    };
    std::vector<ChiData> chi;

    std::vector<Cyclo> act(const GAElement& x, const std::vector<Cyclo>& v) const {
        const FiniteGroup& g = reps.group();
        std::vector<Cyclo> out(dim);
        if (rank) {
            unsigned order = g.order();
            for (unsigned blk = 0; blk < *rank; ++blk)
                for (unsigned h = 0; h < order; ++h) {
                    if (v[blk * order + h].is_zero()) continue;
                    for (unsigned y = 0; y < order; ++y) {
                        if (x.coeff(y).is_zero()) continue;
                        out[blk * order + g.mul(y, h)] += x.coeff(y) * v[blk * order + h];
                    }
                }
        } else {
            for (unsigned y = 0; y < g.order(); ++y) {
                if (x.coeff(y).is_zero()) continue;
                for (unsigned r = 0; r < dim; ++r)
                    for (unsigned c = 0; c < dim; ++c) {
                        if (action[y][r][c].is_zero() || v[c].is_zero()) continue;
                        out[r] += x.coeff(y) * action[y][r][c] * v[c];
                    }
            }
        }
        return out;
    }
};

namespace {

// u_{jk}^chi = (deg/|G|) sum_g rho_chi(g^{-1})[k][j] * g maps to the matrix
// unit E_{jk} in the chi block and to zero elsewhere; only the first row
// u_{1j} is needed here.
GAElement matrix_unit_element(const RepSet& reps, unsigned chi, unsigned j) {
    const FiniteGroup& g = reps.group();
    unsigned deg = reps.table().irreducible(chi).degree;
    GAElement u(g);
    Cyclo scale(Rat((long)deg, (long)g.order()));
    for (unsigned x = 0; x < g.order(); ++x) {
        const Cyclo& entry = reps.rep(chi).at(g.inverse(x))[j][0];
        if (!entry.is_zero()) u.coeff(x) = entry * scale;
    }
    return u;
}

void build_chi_data(GAModule::Data& d) {
    const CharacterTable& t = d.reps.table();
    const unsigned n = d.dim;
    d.chi.resize(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi) {
        auto& cd = d.chi[chi];
        unsigned deg = t.irreducible(chi).degree;
        cd.u_row.reserve(deg);
        for (unsigned j = 0; j < deg; ++j)
            cd.u_row.push_back(matrix_unit_element(d.reps, chi, j));

        // W = u_{11} M; scan the images of the standard basis and keep those
        // that extend the span (kept unreduced so Galois conjugation of the
        // module data commutes with the choice)
        std::vector<std::vector<Cyclo>> reduced;
        std::vector<unsigned> lead;
        std::vector<std::vector<Cyclo>> images;
        for (unsigned b = 0; b < n; ++b) {
            std::vector<Cyclo> e(n);
            e[b] = Cyclo::one();
            std::vector<Cyclo> img = d.act(cd.u_row[0], e);
            std::vector<Cyclo> w = img;
            for (std::size_t r = 0; r < reduced.size(); ++r) {
                if (w[lead[r]].is_zero()) continue;
                Cyclo f = w[lead[r]];
                for (unsigned c2 = 0; c2 < n; ++c2) w[c2] -= f * reduced[r][c2];
            }
            unsigned lz = 0;
            while (lz < n && w[lz].is_zero()) ++lz;
            if (lz == n) continue;
            Cyclo inv = w[lz].inverse();
            for (auto& c2 : w) c2 *= inv;
            images.push_back(std::move(img));
            reduced.push_back(std::move(w));
            lead.push_back(lz);
        }
        cd.mult = (unsigned)images.size();
        cd.basis.assign(n, std::vector<Cyclo>(cd.mult));
        for (unsigned c = 0; c < cd.mult; ++c)
            for (unsigned r = 0; r < n; ++r) cd.basis[r][c] = images[c][r];
        if (cd.mult == 0) continue;

        // greedy choice of rows giving an invertible mult x mult submatrix
        std::vector<std::vector<Cyclo>> probe;
        std::vector<unsigned> plead;
        for (unsigned r = 0; r < n && cd.pivot_rows.size() < cd.mult; ++r) {
            std::vector<Cyclo> row(cd.basis[r]);
            for (std::size_t s = 0; s < probe.size(); ++s) {
                if (row[plead[s]].is_zero()) continue;
                Cyclo f = row[plead[s]];
                for (unsigned c2 = 0; c2 < cd.mult; ++c2) row[c2] -= f * probe[s][c2];
            }
            unsigned lz = 0;
            while (lz < cd.mult && row[lz].is_zero()) ++lz;
            if (lz == cd.mult) continue;
            Cyclo inv = row[lz].inverse();
            for (auto& c2 : row) c2 *= inv;
            probe.push_back(std::move(row));
            plead.push_back(lz);
            cd.pivot_rows.push_back(r);
        }
        require(cd.pivot_rows.size() == cd.mult, "LiftFailure",
                "multiplicity basis is singular");

        CycloMatrix aug(cd.mult, std::vector<Cyclo>(2 * cd.mult));
        for (unsigned r = 0; r < cd.mult; ++r) {
            for (unsigned c = 0; c < cd.mult; ++c) aug[r][c] = cd.basis[cd.pivot_rows[r]][c];
            aug[r][cd.mult + r] = Cyclo::one();
        }
        for (unsigned col = 0; col < cd.mult; ++col) {
            unsigned piv = col;
            while (aug[piv][col].is_zero()) ++piv;
            std::swap(aug[piv], aug[col]);
            Cyclo inv = aug[col][col].inverse();
            for (auto& v : aug[col]) v *= inv;
            for (unsigned r = 0; r < cd.mult; ++r) {
                if (r == col || aug[r][col].is_zero()) continue;
                Cyclo f = aug[r][col];
                for (unsigned c2 = 0; c2 < 2 * cd.mult; ++c2) aug[r][c2] -= f * aug[col][c2];
            }
        }
        cd.solver.assign(cd.mult, std::vector<Cyclo>(cd.mult));
        for (unsigned r = 0; r < cd.mult; ++r)
            for (unsigned c = 0; c < cd.mult; ++c) cd.solver[r][c] = aug[r][cd.mult + c];
    }
}

} // namespace

GAModule GAModule::free_module(const RepSet& reps, unsigned rank) {
    auto d = std::make_shared<Data>();
    d->reps = reps;
    d->rank = rank;
    d->dim = rank * reps.group().order();
    build_chi_data(*d);
    GAModule m;
    m.d_ = std::move(d);
    return m;
}

GAModule GAModule::from_action(const RepSet& reps, std::vector<CycloMatrix> action) {
    const FiniteGroup& g = reps.group();
    require(action.size() == g.order(), "BadInput", "one action matrix per group element");
    unsigned n = (unsigned)action[0].size();
    for (const auto& m : action)
        require(m.size() == n && m[0].size() == n, "BadInput", "action matrices must agree");
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = 0; b < g.order(); ++b)
            require(cyclo_mat_mul(action[a], action[b]) == action[g.mul(a, b)],
                    "BadInput", "action is not a representation");
    auto d = std::make_shared<Data>();
    d->reps = reps;
    d->dim = n;
    d->action = std::move(action);
    build_chi_data(*d);
    GAModule m;
    m.d_ = std::move(d);
    return m;
}

const RepSet& GAModule::reps() const { return d_->reps; }
unsigned GAModule::dim() const { return d_->dim; }
std::optional<unsigned> GAModule::free_rank() const { return d_->rank; }
unsigned GAModule::multiplicity(unsigned char_index) const {
    return d_->chi[char_index].mult;
}

std::vector<Cyclo> GAModule::act(const GAElement& x, const std::vector<Cyclo>& v) const {
    return d_->act(x, v);
}

std::vector<Cyclo> GAModule::vector_of(const std::vector<GAElement>& coords) const {
    require(d_->rank && coords.size() == *d_->rank, "BadInput",
            "coordinate count must equal the free rank");
    unsigned order = group().order();
    std::vector<Cyclo> v(d_->dim);
    for (unsigned j = 0; j < coords.size(); ++j)
        for (unsigned g = 0; g < order; ++g) v[j * order + g] = coords[j].coeff(g);
    return v;
}

std::vector<Cyclo> GAModule::basis_vector(unsigned j) const {
    require(d_->rank && j < *d_->rank, "IndexOutOfRange", "basis index out of range");
    std::vector<Cyclo> v(d_->dim);
    v[j * group().order() + group().identity()] = Cyclo::one();
    return v;
}

CycloMatrix GAModule::component_rows(unsigned char_index, const std::vector<Cyclo>& v) const {
    const auto& cd = d_->chi[char_index];
    unsigned deg = reps().table().irreducible(char_index).degree;
    CycloMatrix rows(deg, std::vector<Cyclo>(cd.mult));
    for (unsigned j = 0; j < deg; ++j) {
        std::vector<Cyclo> w = d_->act(cd.u_row[j], v);
        for (unsigned c = 0; c < cd.mult; ++c) {
            Cyclo s;
            for (unsigned k = 0; k < cd.mult; ++k) {
                if (cd.solver[c][k].is_zero() || w[cd.pivot_rows[k]].is_zero()) continue;
                s += cd.solver[c][k] * w[cd.pivot_rows[k]];
            }
            rows[j][c] = std::move(s);
        }
    }
    return rows;
}

std::vector<Cyclo> GAModule::basis_of_multiplicity(unsigned char_index, unsigned t) const {
    const auto& cd = d_->chi[char_index];
    std::vector<Cyclo> v(d_->dim);
    for (unsigned r = 0; r < d_->dim; ++r) v[r] = cd.basis[r][t];
    return v;
}

// ---------------------------------------------------------------------------
// homomorphisms

namespace {

CycloMatrix right_mul_matrix(const FiniteGroup& g, const GAElement& a) {
    CycloMatrix m(g.order(), std::vector<Cyclo>(g.order()));
    for (unsigned h = 0; h < g.order(); ++h)
        for (unsigned x = 0; x < g.order(); ++x) {
            if (a.coeff(x).is_zero()) continue;
            m[g.mul(h, x)][h] += a.coeff(x);
        }
    return m;
}

} // namespace

ModuleHom ModuleHom::on_free(const GAModule& m, const std::vector<GAElement>& images) {
    require(m.free_rank() && images.size() == *m.free_rank(), "BadInput",
            "one image per free generator");
    const FiniteGroup& g = m.group();
    ModuleHom hom;
    hom.module = m;
    hom.f.assign(g.order(), std::vector<Cyclo>(m.dim()));
    for (unsigned j = 0; j < images.size(); ++j) {
        CycloMatrix r = right_mul_matrix(g, images[j]);
        for (unsigned row = 0; row < g.order(); ++row)
            for (unsigned col = 0; col < g.order(); ++col)
                hom.f[row][j * g.order() + col] = std::move(r[row][col]);
    }
    return hom;
}

ModuleHom ModuleHom::dual_basis(const GAModule& m, unsigned i) {
    require(m.free_rank() && i < *m.free_rank(), "IndexOutOfRange",
            "dual basis index out of range");
    std::vector<GAElement> images(*m.free_rank(), GAElement(m.group()));
    images[i] = GAElement::scalar(m.group(), Cyclo::one());
    return on_free(m, images);
}

std::vector<Cyclo> ModuleHom::operator()(const std::vector<Cyclo>& v) const {
    const unsigned rows = (unsigned)f.size();
    std::vector<Cyclo> out(rows);
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < v.size(); ++c) {
            if (f[r][c].is_zero() || v[c].is_zero()) continue;
            out[r] += f[r][c] * v[c];
        }
    return out;
}

GAElement ModuleHom::apply_as_algebra(const std::vector<Cyclo>& v) const {
    return GAElement(module.group(), (*this)(v));
}

bool ModuleHom::validate() const {
    const FiniteGroup& g = module.group();
    std::vector<unsigned> gens;
    {
        Subgroup span = Subgroup::trivial(g);
        for (unsigned x = 0; x < g.order() && span.order() < g.order(); ++x) {
            if (span.contains(x)) continue;
            gens.push_back(x);
            span = Subgroup::generated(g, gens);
        }
    }
    for (unsigned gen : gens) {
        GAElement xg = GAElement::basis(g, gen);
        for (unsigned b = 0; b < module.dim(); ++b) {
            std::vector<Cyclo> e(module.dim());
            e[b] = Cyclo::one();
            std::vector<Cyclo> lhs = (*this)(module.act(xg, e));
            GAElement rhs = xg * apply_as_algebra(e);
            for (unsigned r = 0; r < g.order(); ++r)
                if (lhs[r] != rhs.coeff(r)) return false;
        }
    }
    return true;
}

std::vector<ModuleHom> dual_basis_homs(const GAModule& m) {
    std::vector<ModuleHom> out;
    for (unsigned i = 0; i < *m.free_rank(); ++i) out.push_back(ModuleHom::dual_basis(m, i));
    return out;
}

ModuleHom row_functional(const GAModule& m, const GAMatrix& c, unsigned i) {
    require(m.free_rank() && c.rows() == *m.free_rank() && c.cols() == *m.free_rank(),
            "BadInput", "endomorphism matrix must match the free rank");
    require(i < *m.free_rank(), "IndexOutOfRange", "row index out of range");
    // v -> (phi(v))_i = sum_j v_j c[j][i]
    std::vector<GAElement> images;
    for (unsigned j = 0; j < c.rows(); ++j) images.push_back(c.at(j, i));
    return ModuleHom::on_free(m, images);
}

// ---------------------------------------------------------------------------
// wedge elements

WedgeElement::WedgeElement(GAModule m, unsigned degree,
                           std::vector<std::vector<Cyclo>> coords)
    : module_(std::move(m)), degree_(degree), coords_(std::move(coords)) {}

bool WedgeElement::is_zero() const {
    for (const auto& block : coords_)
        for (const auto& v : block)
            if (!v.is_zero()) return false;
    return true;
}

bool WedgeElement::operator==(const WedgeElement& o) const {
    if (!module_.same_as(o.module_) || degree_ != o.degree_) return false;
    return coords_ == o.coords_;
}

WedgeElement WedgeElement::operator+(const WedgeElement& o) const {
    require(module_.same_as(o.module_) && degree_ == o.degree_, "DegreeMismatch",
            "sum of wedge elements of different shape");
    auto c = coords_;
    for (unsigned chi = 0; chi < c.size(); ++chi)
        for (unsigned i = 0; i < c[chi].size(); ++i) c[chi][i] += o.coords_[chi][i];
    return WedgeElement(module_, degree_, std::move(c));
}

WedgeElement WedgeElement::scaled(const CentralElement& z) const {
    auto c = coords_;
    for (unsigned chi = 0; chi < c.size(); ++chi)
        for (auto& v : c[chi]) v *= z.coord(chi);
    return WedgeElement(module_, degree_, std::move(c));
}

WedgeElement WedgeElement::scaled(const Cyclo& s) const {
    auto c = coords_;
    for (auto& block : c)
        for (auto& v : block) v *= s;
    return WedgeElement(module_, degree_, std::move(c));
}

CentralElement WedgeElement::as_central() const {
    require(degree_ == 0, "DegreeMismatch", "only degree-0 elements are central");
    std::vector<Cyclo> coords;
    for (const auto& block : coords_) coords.push_back(block[0]);
    return CentralElement(module_.reps().table(), std::move(coords));
}

DualWedgeElement::DualWedgeElement(GAModule m, unsigned degree,
                                   std::vector<std::vector<Cyclo>> coords)
    : module_(std::move(m)), degree_(degree), coords_(std::move(coords)) {}

WedgeElement wedge(const GAModule& m, const std::vector<std::vector<Cyclo>>& elements) {
    const CharacterTable& t = m.reps().table();
    unsigned r = (unsigned)elements.size();
    std::vector<std::vector<Cyclo>> coords(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi) {
        if (r == 0) {
            coords[chi] = {Cyclo::one()};
            continue;
        }
        unsigned deg = t.irreducible(chi).degree;
        CycloMatrix rows;
        rows.reserve((std::size_t)r * deg);
        for (const auto& el : elements) {
            CycloMatrix block = m.component_rows(chi, el);
            for (auto& row : block) rows.push_back(std::move(row));
        }
        coords[chi] = all_maximal_minors(rows, m.multiplicity(chi));
    }
    return WedgeElement(m, r, std::move(coords));
}

WedgeElement wedge_free(const GAModule& m,
                        const std::vector<std::vector<GAElement>>& elements) {
    std::vector<std::vector<Cyclo>> vecs;
    for (const auto& el : elements) vecs.push_back(m.vector_of(el));
    return wedge(m, vecs);
}

DualWedgeElement dual_wedge(const GAModule& m, const std::vector<ModuleHom>& homs) {
    const CharacterTable& t = m.reps().table();
    const RepSet& reps = m.reps();
    unsigned s = (unsigned)homs.size();
    std::vector<std::vector<Cyclo>> coords(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi) {
        if (s == 0) {
            coords[chi] = {Cyclo::one()};
            continue;
        }
        unsigned deg = t.irreducible(chi).degree;
        unsigned mult = m.multiplicity(chi);
        // row (a, j) is the functional w -> rho_chi(phi_a(w))[0][j], evaluated
        // on the multiplicity basis vectors
        CycloMatrix rows((std::size_t)s * deg, std::vector<Cyclo>(mult));
        for (unsigned tcol = 0; tcol < mult; ++tcol) {
            std::vector<Cyclo> wt = m.basis_of_multiplicity(chi, tcol);
            for (unsigned a = 0; a < s; ++a) {
                GAElement img = homs[a].apply_as_algebra(wt);
                CycloMatrix mat = reps.apply(chi, img);
                for (unsigned j = 0; j < deg; ++j) rows[a * deg + j][tcol] = mat[0][j];
            }
        }
        coords[chi] = all_maximal_minors(rows, mult);
    }
    return DualWedgeElement(m, s, std::move(coords));
}

WedgeElement pair_contract(const DualWedgeElement& phi, const WedgeElement& x) {
    require(phi.module().same_as(x.module()), "DegreeMismatch",
            "pairing needs a common module");
    require(phi.degree() <= x.degree(), "DegreeMismatch",
            "dual degree exceeds the wedge degree");
    const GAModule& m = x.module();
    const CharacterTable& t = m.reps().table();
    unsigned r = x.degree(), s = phi.degree();
    std::vector<std::vector<Cyclo>> out(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi) {
        unsigned deg = t.irreducible(chi).degree;
        unsigned mult = m.multiplicity(chi);
        auto t_sets = sorted_subsets(mult, s * deg);
        auto u_sets = sorted_subsets(mult, (r - s) * deg);
        std::vector<Cyclo> res(std::max<std::size_t>(u_sets.size(), 1));
        for (unsigned ui = 0; ui < u_sets.size(); ++ui) {
            Cyclo acc;
            for (unsigned ti = 0; ti < t_sets.size(); ++ti) {
                if (phi.coords(chi)[ti].is_zero()) continue;
                const auto& tset = t_sets[ti];
                const auto& uset = u_sets[ui];
                std::vector<unsigned> uni;
                uni.reserve(tset.size() + uset.size());
                std::merge(tset.begin(), tset.end(), uset.begin(), uset.end(),
                           std::back_inserter(uni));
                bool dup = false;
                for (std::size_t i = 1; i < uni.size(); ++i)
                    if (uni[i] == uni[i - 1]) dup = true;
                if (dup) continue;
                int sign = merge_sign(tset, uset);
                Cyclo term =
                    phi.coords(chi)[ti] * x.coords(chi)[subset_position(mult, uni)];
                acc += sign > 0 ? term : -term;
            }
            res[ui] = std::move(acc);
        }
        out[chi] = std::move(res);
    }
    return WedgeElement(m, r - s, std::move(out));
}

CentralElement evaluation_image(const WedgeElement& x, const std::vector<ModuleHom>& homs) {
    require(homs.size() == x.degree(), "DegreeMismatch",
            "evaluation needs as many homomorphisms as the degree");
    return pair_contract(dual_wedge(x.module(), homs), x).as_central();
}

bool rubin_membership(const WedgeElement& x, const std::vector<ModuleHom>& generating_homs,
                      std::uint64_t p) {
    const FiniteGroup& g = x.module().group();
    require(g.order() % p != 0, "BadPrime", "prime divides the group order");
    unsigned r = x.degree();
    if (r == 0) {
        for (const auto& c : x.as_central().coords())
            if (!c.is_p_integral(p)) return false;
        return true;
    }
    require(generating_homs.size() >= r, "BadInput",
            "need at least degree-many generating homomorphisms");
    for (const auto& pick : sorted_subsets((unsigned)generating_homs.size(), r)) {
        std::vector<ModuleHom> tuple;
        for (unsigned i : pick) tuple.push_back(generating_homs[i]);
        CentralElement val = evaluation_image(x, tuple);
        for (const auto& c : val.coords())
            if (!c.is_p_integral(p)) return false;
    }
    return true;
}

WedgeElement basis_wedge(const GAModule& m) {
    require(m.free_rank().has_value(), "BadInput", "basis wedge needs a free module");
    std::vector<std::vector<Cyclo>> basis;
    for (unsigned j = 0; j < *m.free_rank(); ++j) basis.push_back(m.basis_vector(j));
    return wedge(m, basis);
}

WedgeElement element_construction(const GAModule& m, const GAMatrix& phi,
                                  const std::vector<unsigned>& index_set) {
    require(phi.rows() == phi.cols(), "BadInput", "endomorphism matrix must be square");
    require(m.free_rank() && *m.free_rank() == phi.rows(), "BadInput",
            "module rank must match the matrix");
    unsigned d = phi.rows();
    for (unsigned i : index_set)
        require(i < d, "IndexOutOfRange", "index set exceeds the rank");
    std::vector<ModuleHom> homs;
    for (unsigned i : index_set) homs.push_back(row_functional(m, phi, i));
    return pair_contract(dual_wedge(m, homs), basis_wedge(m));
}

} // namespace eqk
