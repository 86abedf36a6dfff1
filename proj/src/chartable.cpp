#include "eqk/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqk {

// ---------------------------------------------------------------------------
// F_l linear algebra for the class-sum diagonalization

namespace {

using Fp = std::uint64_t;

struct PrimeField {
    Fp l;
    Fp add(Fp a, Fp b) const { return (a + b) % l; }
    Fp sub(Fp a, Fp b) const { return (a + l - b % l) % l; }
    Fp mul(Fp a, Fp b) const { return (__uint128_t)a * b % l; }
    Fp inv(Fp a) const { return pow_mod(a, l - 2, l); }
};

using FpVec = std::vector<Fp>;
using FpMat = std::vector<FpVec>;

// Basis of the kernel of m (rows x cols), as vectors of length cols.
std::vector<FpVec> kernel_basis(const PrimeField& f, FpMat m, unsigned cols) {
    unsigned rows = (unsigned)m.size();
    std::vector<int> pivot_col_of_row(rows, -1);
    unsigned rank = 0;
    for (unsigned c = 0; c < cols && rank < rows; ++c) {
        unsigned pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        Fp inv = f.inv(m[rank][c]);
        for (unsigned j = 0; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Fp factor = m[r][c];
            for (unsigned j = 0; j < cols; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
        }
        pivot_col_of_row[rank] = (int)c;
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;
    std::vector<FpVec> basis;
    for (unsigned c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        FpVec v(cols, 0);
        v[c] = 1;
        for (unsigned r = 0; r < rank; ++r)
            v[pivot_col_of_row[r]] = f.sub(0, m[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve a * x = b where the columns of a are independent; a is rows x cols.
FpVec solve(const PrimeField& f, FpMat a, FpVec b, unsigned cols) {
    unsigned rows = (unsigned)a.size();
    FpVec x(cols, 0);
    unsigned rank = 0;
    std::vector<int> pivot_col_of_row(rows, -1);
    for (unsigned c = 0; c < cols && rank < rows; ++c) {
        unsigned pr = rank;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[rank]);
        std::swap(b[pr], b[rank]);
        Fp inv = f.inv(a[rank][c]);
        for (unsigned j = 0; j < cols; ++j) a[rank][j] = f.mul(a[rank][j], inv);
        b[rank] = f.mul(b[rank], inv);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Fp factor = a[r][c];
            for (unsigned j = 0; j < cols; ++j)
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[rank][j]));
            b[r] = f.sub(b[r], f.mul(factor, b[rank]));
        }
        pivot_col_of_row[rank] = (int)c;
        ++rank;
    }
    for (unsigned r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

} // namespace

// ---------------------------------------------------------------------------
// table computation

struct CharacterTable::Data {
    FiniteGroup group;
    std::vector<Character> irreducibles;
};

const FiniteGroup& CharacterTable::group() const { return d_->group; }
unsigned CharacterTable::size() const { return (unsigned)d_->irreducibles.size(); }
const Character& CharacterTable::irreducible(unsigned i) const { return d_->irreducibles[i]; }
const std::vector<Character>& CharacterTable::irreducibles() const { return d_->irreducibles; }

Cyclo class_function_inner(const FiniteGroup& g, const ClassFunction& f,
                           const ClassFunction& h) {
    Cyclo s;
    const auto& classes = g.conjugacy_classes();
    for (unsigned i = 0; i < classes.size(); ++i) {
        Cyclo term = f[i] * h[g.inverse_class(i)];
        s += term.operator*(Cyclo(Rat((long)classes[i].size())));
    }
    return s * Cyclo(Rat(1, (long)g.order()));
}

bool Character::is_trivial() const {
    for (const auto& v : values)
        if (v != Cyclo::one()) return false;
    return true;
}

CharacterTable CharacterTable::compute(const FiniteGroup& g) {
    const unsigned n = g.order();
    const auto& classes = g.conjugacy_classes();
    const unsigned k = (unsigned)classes.size();
    const unsigned e = g.exponent();

    // least prime l = 1 (mod e) with l > 2 sqrt(|G|)
    Fp l = e + 1;
    double bound = 2.0 * std::sqrt((double)n);
    while (!(is_prime_u64(l) && (double)l > bound)) l += e;
    PrimeField f{l};

    // class multiplication coefficients: C_i C_j = sum_t a[i][j][t] C_t,
    // a[i][j][t] = #{(x,y) in K_i x K_j : x y = z_t} for fixed z_t
    std::vector<std::vector<std::vector<unsigned>>> a(
        k, std::vector<std::vector<unsigned>>(k, std::vector<unsigned>(k, 0)));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            std::vector<unsigned> count(n, 0);
            for (unsigned x : classes[i])
                for (unsigned y : classes[j]) ++count[g.mul(x, y)];
            for (unsigned t = 0; t < k; ++t) a[i][j][t] = count[classes[t][0]];
        }

    // matrices of multiplication by C_i on the centre, mod l
    std::vector<FpMat> m(k, FpMat(k, FpVec(k, 0)));
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            for (unsigned t = 0; t < k; ++t) m[i][t][j] = a[i][j][t] % l;

    // split the centre into common eigenspaces
    std::vector<std::vector<FpVec>> spaces;
    {
        std::vector<FpVec> full;
        for (unsigned j = 0; j < k; ++j) {
            FpVec v(k, 0);
            v[j] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (unsigned i = 0; i < k; ++i) {
        std::vector<std::vector<FpVec>> next;
        for (auto& basis : spaces) {
            unsigned dim = (unsigned)basis.size();
            if (dim == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // restriction of M_i to the (invariant) subspace, in basis coords
            FpMat cols(k, FpVec(dim, 0));
            for (unsigned b = 0; b < dim; ++b)
                for (unsigned r = 0; r < k; ++r) cols[r][b] = basis[b][r];
            FpMat restricted(dim, FpVec(dim, 0));
            for (unsigned b = 0; b < dim; ++b) {
                FpVec img(k, 0);
                for (unsigned r = 0; r < k; ++r)
                    for (unsigned c = 0; c < k; ++c)
                        img[r] = f.add(img[r], f.mul(m[i][r][c], basis[b][c]));
                FpVec coords = solve(f, cols, img, dim);
                for (unsigned r = 0; r < dim; ++r) restricted[r][b] = coords[r];
            }
            // split into eigenspaces over F_l
            for (Fp lam = 0; lam < l; ++lam) {
                FpMat shifted = restricted;
                for (unsigned d = 0; d < dim; ++d) shifted[d][d] = f.sub(shifted[d][d], lam);
                auto ker = kernel_basis(f, shifted, dim);
                if (ker.empty()) continue;
                std::vector<FpVec> sub;
                for (auto& kv : ker) {
                    FpVec ambient(k, 0);
                    for (unsigned b = 0; b < dim; ++b)
                        for (unsigned r = 0; r < k; ++r)
                            ambient[r] = f.add(ambient[r], f.mul(kv[b], basis[b][r]));
                    sub.push_back(std::move(ambient));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        if (std::all_of(spaces.begin(), spaces.end(),
                        [](const auto& s) { return s.size() == 1; }))
            break;
    }
    require(spaces.size() == k, "LiftFailure",
            "class algebra did not split into one-dimensional eigenspaces");

    // central character values omega_i and degrees
    std::vector<unsigned> inv_class(k);
    for (unsigned i = 0; i < k; ++i) inv_class[i] = g.inverse_class(i);

    // primitive e-th root of unity in F_l
    Fp z = 0;
    for (Fp w = 2; w < l; ++w) {
        bool generator = true;
        for (auto [p, _] : factorize(l - 1))
            if (pow_mod(w, (l - 1) / p, l) == 1) {
                generator = false;
                break;
            }
        if (generator) {
            z = pow_mod(w, (l - 1) / e, l);
            break;
        }
    }
    require(z != 0, "LiftFailure", "no generator of the prime field");

    std::vector<Character> irreducibles;
    for (const auto& space : spaces) {
        const FpVec& v = space[0];
        unsigned pivot = 0;
        while (v[pivot] == 0) ++pivot;
        FpVec omega(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            Fp img = 0;
            for (unsigned c = 0; c < k; ++c) img = f.add(img, f.mul(m[i][pivot][c], v[c]));
            omega[i] = f.mul(img, f.inv(v[pivot]));
        }
        // degree from the orthogonality relation
        Fp s = 0;
        for (unsigned i = 0; i < k; ++i) {
            Fp term = f.mul(omega[i], omega[inv_class[i]]);
            s = f.add(s, f.mul(term, f.inv(classes[i].size() % l)));
        }
        Fp deg_sq = f.mul(n % l, f.inv(s));
        unsigned degree = 0;
        for (unsigned d = 1; (double)d * d <= (double)n; ++d)
            if (f.mul(d, d) == deg_sq) {
                degree = d;
                break;
            }
        require(degree > 0, "LiftFailure", "no degree matches the eigenvalue data");

        // character values mod l, then lifted through eigenvalue multiplicities
        FpVec theta(k);
        for (unsigned i = 0; i < k; ++i)
            theta[i] = f.mul(f.mul(degree, omega[i]), f.inv(classes[i].size() % l));

        Character chi;
        chi.group = g;
        chi.degree = degree;
        chi.values.resize(k);
        Fp e_inv = f.inv(e % l);
        for (unsigned i = 0; i < k; ++i) {
            std::vector<Rat> mult(e, Rat(0));
            for (unsigned j = 0; j < e; ++j) {
                Fp acc = 0;
                for (unsigned t = 0; t < e; ++t) {
                    Fp zpow = pow_mod(z, (std::uint64_t)(e - j) * t % e, l);
                    acc = f.add(acc, f.mul(theta[g.class_of_power(i, t)], zpow));
                }
                acc = f.mul(acc, e_inv);
                require(acc <= degree, "LiftFailure", "eigenvalue multiplicity out of range");
                mult[j] = Rat((unsigned long)acc);
            }
            Cyclo val;
            for (unsigned j = 0; j < e; ++j)
                if (mult[j] != 0)
                    val += Cyclo::root_of_unity(e, j).operator*(Cyclo(mult[j]));
            chi.values[i] = val;
        }
        irreducibles.push_back(std::move(chi));
    }

    // canonical order: degree, then lexicographic values
    std::sort(irreducibles.begin(), irreducibles.end(),
              [](const Character& x, const Character& y) {
                  if (x.degree != y.degree) return x.degree < y.degree;
                  for (unsigned i = 0; i < x.values.size(); ++i) {
                      int c = Cyclo::compare(x.values[i], y.values[i]);
                      if (c) return c < 0;
                  }
                  return false;
              });

    // exact verification before returning
    unsigned long deg_sq_sum = 0;
    for (const auto& chi : irreducibles) deg_sq_sum += (unsigned long)chi.degree * chi.degree;
    require(deg_sq_sum == n, "LiftFailure", "sum of squared degrees != |G|");
    for (unsigned r = 0; r < k; ++r)
        for (unsigned s2 = r; s2 < k; ++s2) {
            Cyclo ip = class_function_inner(g, irreducibles[r].values, irreducibles[s2].values);
            require(ip == (r == s2 ? Cyclo::one() : Cyclo::zero()),
                    "LiftFailure", "row orthogonality fails");
        }

    auto data = std::make_shared<CharacterTable::Data>();
    data->group = g;
    data->irreducibles = std::move(irreducibles);
    CharacterTable t;
    t.d_ = std::move(data);
    return t;
}

unsigned CharacterTable::trivial_index() const {
    for (unsigned i = 0; i < size(); ++i)
        if (d_->irreducibles[i].is_trivial()) return i;
    fail("LiftFailure", "no trivial character");
}

unsigned CharacterTable::index_of_values(const ClassFunction& v, const char* what) const {
    for (unsigned i = 0; i < size(); ++i)
        if (d_->irreducibles[i].values == v) return i;
    fail("LiftFailure", std::string(what) + " is not in the table");
}

unsigned CharacterTable::contragredient(unsigned i) const {
    ClassFunction v(size());
    for (unsigned c = 0; c < size(); ++c)
        v[c] = d_->irreducibles[i].values[d_->group.inverse_class(c)];
    return index_of_values(v, "contragredient character");
}

unsigned CharacterTable::galois_conjugate(unsigned i, std::uint64_t a) const {
    ClassFunction v(size());
    for (unsigned c = 0; c < size(); ++c) {
        const Cyclo& x = d_->irreducibles[i].values[c];
        std::uint64_t nc = x.conductor();
        v[c] = x.galois(a % nc == 0 ? 1 : a % nc);
    }
    return index_of_values(v, "galois conjugate character");
}

std::vector<Int> CharacterTable::decompose(const ClassFunction& file) const {
    std::vector<Int> mult;
    for (unsigned i = 0; i < size(); ++i) {
        Cyclo ip = class_function_inner(d_->group, file, d_->irreducibles[i].values);
        require(ip.is_rational(), "NotIntegral", "inner product is irrational");
        Rat q = ip.rational_value();
        require(is_integer(q), "NotIntegral", "inner product is not an integer");
        mult.push_back(q.get_num());
    }
    return mult;
}

unsigned fixed_space_dimension(const Character& chi, const Subgroup& h) {

    require(chi.group.same_as(h.parent), "NotSubgroup", "subgroup of a different group");
    Cyclo s;
    for (unsigned x : h.elements) s += chi.at_element(x);
    s *= Cyclo(Rat(1, (long)h.elements.size()));
    require(s.is_rational(), "NotIntegral", "fixed-space dimension is irrational");
    Rat q = s.rational_value();
    require(is_integer(q) && q >= 0, "NotIntegral", "fixed-space dimension is not a natural number");
    return (unsigned)q.get_num().get_ui();
}

GAElement central_idempotent(const Character& chi) {
    const FiniteGroup& g = chi.group;
    GAElement e(g);
    Cyclo scale = Cyclo(Rat((long)chi.degree, (long)g.order()));
    for (unsigned x = 0; x < g.order(); ++x)
        e.coeff(g.inverse(x)) = chi.at_element(x) * scale;
    return e;
}

int frobenius_schur(const Character& chi) {
    const FiniteGroup& g = chi.group;
    Cyclo s;
    const auto& classes = g.conjugacy_classes();
    for (unsigned i = 0; i < classes.size(); ++i) {
        Cyclo v = chi.values[g.class_of_power(i, 2)];
        s += v * Cyclo(Rat((long)classes[i].size()));
    }
    s *= Cyclo(Rat(1, (long)g.order()));
    require(s.is_rational() && is_integer(s.rational_value()), "NotIntegral",
            "indicator is not an integer");
    long v = s.rational_value().get_num().get_si();
    require(v >= -1 && v <= 1, "NotIntegral", "indicator outside {-1,0,1}");
    return (int)v;
}

// ---------------------------------------------------------------------------
// CentralElement

CentralElement::CentralElement(const CharacterTable& t, std::vector<Cyclo> coords)
    : table_(t), coords_(std::move(coords)) {
    require(coords_.size() == t.size(), "BadInput", "coordinate count mismatch");
}

CentralElement CentralElement::one(const CharacterTable& t) {
    return CentralElement(t, std::vector<Cyclo>(t.size(), Cyclo::one()));
}

CentralElement CentralElement::from_rational(const CharacterTable& t, const Rat& q) {
    return CentralElement(t, std::vector<Cyclo>(t.size(), Cyclo(q)));
}

CentralElement CentralElement::operator*(const CentralElement& o) const {
    std::vector<Cyclo> c(coords_);
    for (unsigned i = 0; i < c.size(); ++i) c[i] *= o.coords_[i];
    return CentralElement(table_, std::move(c));
}

CentralElement CentralElement::operator+(const CentralElement& o) const {
    std::vector<Cyclo> c(coords_);
    for (unsigned i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return CentralElement(table_, std::move(c));
}

CentralElement CentralElement::operator-(const CentralElement& o) const {
    std::vector<Cyclo> c(coords_);
    for (unsigned i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return CentralElement(table_, std::move(c));
}

CentralElement CentralElement::scaled(const Cyclo& x) const {
    std::vector<Cyclo> c(coords_);
    for (auto& v : c) v *= x;
    return CentralElement(table_, std::move(c));
}

bool CentralElement::operator==(const CentralElement& o) const {
    if (!table_.same_as(o.table_)) return false;
    return coords_ == o.coords_;
}

bool CentralElement::is_invertible() const {
    for (const auto& c : coords_)
        if (c.is_zero()) return false;
    return true;
}

CentralElement CentralElement::inverse() const {
    require(is_invertible(), "Singular", "central element has a vanishing coordinate");
    std::vector<Cyclo> c(coords_);
    for (auto& v : c) v = v.inverse();
    return CentralElement(table_, std::move(c));
}

bool CentralElement::is_rational() const {
    unsigned e = table_.group().exponent();
    for (std::uint64_t a = 1; a < e; ++a) {
        if (gcd_u64(a, e) != 1) continue;
        for (unsigned i = 0; i < coords_.size(); ++i) {
            unsigned j = table_.galois_conjugate(i, a);
            std::uint64_t nc = coords_[i].conductor();
            if (coords_[i].galois(a % nc == 0 ? 1 : a % nc) != coords_[j]) return false;
        }
    }
    return true;
}

CentralElement CentralElement::involution() const {
    std::vector<Cyclo> c(coords_.size());
    for (unsigned i = 0; i < coords_.size(); ++i)
        c[table_.contragredient(i)] = coords_[i];
    return CentralElement(table_, std::move(c));
}

bool CentralElement::is_p_unit(std::uint64_t p) const {
    if (!is_invertible()) return false;
    for (const auto& c : coords_)
        if (!c.is_p_integral(p) || !c.inverse().is_p_integral(p)) return false;
    return true;
}

GAElement CentralElement::to_group_algebra() const {
    GAElement z(table_.group());
    for (unsigned i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        z = z + central_idempotent(table_.irreducible(i)).scaled(coords_[i]);
    }
    return z;
}

CentralElement wedderburn_coords(const CharacterTable& t, const GAElement& z) {
    require(z.group().same_as(t.group()), "BadInput", "element of a different group");
    require(z.is_central(), "NotCentral", "element does not commute with the group");
    const FiniteGroup& g = t.group();
    std::vector<Cyclo> coords(t.size());
    for (unsigned i = 0; i < t.size(); ++i) {
        const Character& chi = t.irreducible(i);
        Cyclo s;
        for (unsigned x = 0; x < g.order(); ++x) {
            if (z.coeff(x).is_zero()) continue;
            s += z.coeff(x) * chi.at_element(x);
        }
        coords[i] = s * Cyclo(Rat(1, (long)chi.degree));
    }
    return CentralElement(t, std::move(coords));
}

// ---------------------------------------------------------------------------
// functoriality

EmbeddedSubgroup materialize(const Subgroup& h) {
    const FiniteGroup& g = h.parent;
    std::vector<unsigned> to_parent = h.elements;
    std::vector<unsigned> local_index(g.order(), UINT32_MAX);
    for (unsigned i = 0; i < to_parent.size(); ++i) local_index[to_parent[i]] = i;
    // identity first, so the builders' normalization holds
    unsigned id_local = local_index[g.identity()];
    if (id_local != 0) {
        std::swap(to_parent[0], to_parent[id_local]);
        local_index[to_parent[0]] = 0;
        local_index[to_parent[id_local]] = id_local;
    }
    unsigned m = (unsigned)to_parent.size();
    std::vector<std::vector<unsigned>> table(m, std::vector<unsigned>(m));
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b) {
            unsigned prod = g.mul(to_parent[a], to_parent[b]);
            require(local_index[prod] != UINT32_MAX, "NotSubgroup", "set is not closed");
            table[a][b] = local_index[prod];
        }
    EmbeddedSubgroup out;
    out.group = FiniteGroup::from_table(std::move(table));
    out.to_parent = std::move(to_parent);
    out.parent = g;
    return out;
}

ClassFunction induce_class_function(const FiniteGroup& g, const EmbeddedSubgroup& h,
                                    const ClassFunction& f_on_h) {
    require(h.parent.same_as(g), "NotSubgroup", "subgroup of a different group");
    std::vector<unsigned> local_index(g.order(), UINT32_MAX);
    for (unsigned i = 0; i < h.to_parent.size(); ++i) local_index[h.to_parent[i]] = i;
    ClassFunction out(g.num_classes());
    for (unsigned cls = 0; cls < g.num_classes(); ++cls) {
        unsigned rep = g.conjugacy_classes()[cls][0];
        Cyclo s;
        for (unsigned x = 0; x < g.order(); ++x) {
            unsigned conj = g.mul(g.mul(g.inverse(x), rep), x);
            if (local_index[conj] == UINT32_MAX) continue;
            s += f_on_h[h.group.class_of(local_index[conj])];
        }
        out[cls] = s * Cyclo(Rat(1, (long)h.to_parent.size()));
    }
    return out;
}

ClassFunction restrict_class_function(const EmbeddedSubgroup& h, const ClassFunction& f_on_g) {
    const FiniteGroup& g = h.parent;
    ClassFunction out(h.group.num_classes());
    for (unsigned cls = 0; cls < h.group.num_classes(); ++cls) {
        unsigned rep_local = h.group.conjugacy_classes()[cls][0];
        out[cls] = f_on_g[g.class_of(h.to_parent[rep_local])];
    }
    return out;
}

ClassFunction inflate_class_function(const GroupHom& pi, const ClassFunction& f_on_q) {
    require(pi.is_surjective(), "NotSurjection", "inflation needs a surjective map");
    const FiniteGroup& g = pi.source;
    const FiniteGroup& q = pi.target;
    ClassFunction out(g.num_classes());
    for (unsigned cls = 0; cls < g.num_classes(); ++cls) {
        unsigned rep = g.conjugacy_classes()[cls][0];
        out[cls] = f_on_q[q.class_of(pi(rep))];
    }
    return out;
}

} // namespace eqk
