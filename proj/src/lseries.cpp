#include "eqk/lseries.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqk {

// ---------------------------------------------------------------------------
// Dirichlet characters

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<Cyclo> values)
    : f_(modulus), values_(std::move(values)) {
    require(f_ >= 1 && values_.size() == f_, "BadInput",
            "need one value per residue class");
    for (std::uint64_t a = 0; a < f_; ++a)
        if (gcd_u64(a, f_) != 1 && f_ > 1)
            require(values_[a].is_zero(), "BadInput", "nonzero value off the units");
    // conductor: least d | f with chi factoring through (Z/d)^x
    conductor_ = f_;
    for (std::uint64_t d = 1; d < f_; ++d) {
        if (f_ % d) continue;
        bool factors = true;
        for (std::uint64_t a = 0; a < f_ && factors; ++a)
            for (std::uint64_t b = a + 1; b < f_ && factors; ++b) {
                if (gcd_u64(a, f_) != 1 || gcd_u64(b, f_) != 1) continue;
                if (a % d == b % d && values_[a] != values_[b]) factors = false;
            }
        if (factors) {
            conductor_ = d;
            break;
        }
    }
}

bool DirichletCharacter::is_trivial() const { return conductor_ == 1; }

bool DirichletCharacter::is_odd() const {
    if (f_ <= 2) return false;
    return value(f_ - 1) == -Cyclo::one();
}

Cyclo DirichletCharacter::primitive_value(std::uint64_t a) const {
    a %= conductor_;
    if (conductor_ == 1) return Cyclo::one();
    if (gcd_u64(a, conductor_) != 1) return Cyclo::zero();
    // find a residue b mod f with b = a (mod conductor) and gcd(b, f) = 1
    for (std::uint64_t b = a; b < a + f_ * conductor_; b += conductor_)
        if (gcd_u64(b % f_ == 0 ? f_ : b % f_, f_) == 1) return value(b % f_);
    fail("BadInput", "no unit lift of the residue");
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    if (f_ != o.f_) return false;
    for (std::uint64_t a = 0; a < f_; ++a)
        if (values_[a] != o.values_[a]) return false;
    return true;
}

CyclotomicData CyclotomicData::build(std::uint64_t f) {
    require(f >= 1, "BadConductor", "conductor must be positive");
    require(f % 4 != 2, "BadConductor",
            "conductor 2 mod 4 duplicates the field of conductor f/2");
    CyclotomicData data;
    data.f = f;
    for (std::uint64_t a = 0; a < f; ++a)
        if (gcd_u64(a == 0 ? f : a, f) == 1 || f == 1) data.residue.push_back(f == 1 ? 1 : a);
    if (f == 1) data.residue = {0};
    unsigned n = (unsigned)data.residue.size();
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    std::map<std::uint64_t, unsigned> index;
    for (unsigned i = 0; i < n; ++i) index[data.residue[i]] = i;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            table[i][j] = index.at(f == 1 ? 0 : data.residue[i] * data.residue[j] % f);
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(data.residue[i]));
    data.group = FiniteGroup::from_table(std::move(table), std::move(labels));
    data.table = CharacterTable::compute(data.group);
    data.element_of_residue.assign(f == 1 ? 1 : f, UINT32_MAX);
    for (unsigned i = 0; i < n; ++i) data.element_of_residue[data.residue[i] % (f == 1 ? 1 : f)] = i;

    for (unsigned chi = 0; chi < data.table.size(); ++chi) {
        std::vector<Cyclo> values(f == 1 ? 1 : f, Cyclo::zero());
        for (unsigned i = 0; i < n; ++i)
            values[data.residue[i] % (f == 1 ? 1 : f)] =
                data.table.irreducible(chi).at_element(i);
        if (f == 1) values[0] = Cyclo::one();
        data.characters.emplace_back(f == 1 ? 1 : f, std::move(values));
    }
    return data;
}

unsigned CyclotomicData::element_of(std::uint64_t a) const {
    if (f == 1) return 0;
    a %= f;
    require(gcd_u64(a == 0 ? f : a, f) == 1, "InvalidUnit",
            std::to_string(a) + " is not a unit modulo " + std::to_string(f));
    return element_of_residue[a];
}

// ---------------------------------------------------------------------------
// values at zero

Cyclo bernoulli_b1(const DirichletCharacter& chi) {
    Cyclo s;
    for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
        const Cyclo& v = chi.value(a % chi.modulus() == 0 ? 0 : a);
        if (v.is_zero()) continue;
        s += v * Cyclo(Rat((long)a));
    }
    return s * Cyclo(Rat(1, (long)chi.modulus()));
}

Cyclo l_value_at_0(const DirichletCharacter& chi) {
    if (chi.is_trivial()) return Cyclo(Rat(-1, 2));
    // -B_1 of the inducing primitive character
    std::uint64_t c = chi.conductor();
    Cyclo s;
    for (std::uint64_t a = 1; a < c; ++a) {
        Cyclo v = chi.primitive_value(a);
        if (v.is_zero()) continue;
        s += v * Cyclo(Rat((long)a));
    }
    return -(s * Cyclo(Rat(1, (long)c)));
}

Cyclo dirichlet_l_value(const DirichletCharacter& chi,
                        const std::vector<std::uint64_t>& s_primes,
                        const std::vector<std::uint64_t>& t_primes) {
    for (auto p : s_primes)
        for (auto q : t_primes)
            require(p != q, "SetOverlap", "S and T must be disjoint");
    Cyclo value = l_value_at_0(chi);
    for (auto p : s_primes) value *= Cyclo::one() - chi.primitive_value(p);
    for (auto q : t_primes)
        value *= Cyclo::one() - chi.primitive_value(q) * Cyclo(Rat((long)q));
    return value;
}

StickelbergerElement stickelberger(const CyclotomicData& data,
                                   const std::vector<std::uint64_t>& s_primes,
                                   const std::vector<std::uint64_t>& t_primes) {
    for (auto p : data.f > 1 ? factorize(data.f) : std::vector<std::pair<std::uint64_t, unsigned>>{})
        require(std::find(s_primes.begin(), s_primes.end(), p.first) != s_primes.end(),
                "BadInput", "S must contain the primes dividing the conductor");
    std::vector<Cyclo> coords(data.table.size());
    for (unsigned chi = 0; chi < data.table.size(); ++chi) {
        unsigned chk = data.table.contragredient(chi);
        coords[chi] = dirichlet_l_value(data.characters[chk], s_primes, t_primes);
    }
    StickelbergerElement theta;
    theta.central = CentralElement(data.table, std::move(coords));
    theta.coefficients = theta.central.to_group_algebra();
    theta.s_primes = s_primes;
    theta.t_primes = t_primes;
    theta.rational = theta.central.is_rational();
    return theta;
}

StickelbergerElement stickelberger_assemble(const CharacterTable& t,
                                            const std::vector<Cyclo>& values) {
    require(values.size() == t.size(), "BadInput", "one value per irreducible");
    std::vector<Cyclo> coords(t.size());
    for (unsigned chi = 0; chi < t.size(); ++chi)
        coords[chi] = values[t.contragredient(chi)];
    StickelbergerElement theta;
    theta.central = CentralElement(t, std::move(coords));
    theta.coefficients = theta.central.to_group_algebra();
    theta.rational = theta.central.is_rational();
    return theta;
}

bool admissible_t(std::uint64_t f, const std::vector<std::uint64_t>& t_primes) {
    if (t_primes.empty()) return false;
    for (auto q : t_primes) {
        if (q % 2 == 0) return false;      // -1 = 1 in residue characteristic 2
        if (f % q == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// abstract setups

const Place& GaloisSetup::place(const std::string& label) const {
    for (const auto& p : places)
        if (p.label == label) return p;
    fail("BadInput", "no place labeled '" + label + "'");
}

bool GaloisSetup::has_place(const std::string& label) const {
    for (const auto& p : places)
        if (p.label == label) return true;
    return false;
}

void GaloisSetup::validate() const {
    std::set<std::string> labels;
    for (const auto& p : places) {
        require(labels.insert(p.label).second, "BadInput", "duplicate place label");
        require(p.decomposition.parent.same_as(group), "BadInput",
                "decomposition subgroup of a different group");
        if (!p.archimedean) {
            require(p.decomposition.contains(p.frobenius), "BadInput",
                    "frobenius lies outside its decomposition group");
            require(p.norm >= 2, "BadInput", "residue norm must be at least 2");
        }
    }
}

GaloisSetup GaloisSetup::cyclotomic(const CyclotomicData& data,
                                    const std::vector<std::uint64_t>& finite_primes) {
    GaloisSetup s;
    s.group = data.group;
    s.table = data.table;
    Place inf;
    inf.label = "inf";
    inf.archimedean = true;
    inf.decomposition =
        Subgroup::generated(data.group, {data.f <= 2 ? data.group.identity()
                                                     : data.element_of(data.f - 1)});
    s.places.push_back(inf);
    for (auto p : finite_primes) {
        Place pl;
        pl.label = std::to_string(p);
        pl.norm = p;
        if (data.f == 1 || data.f % p != 0) {
            pl.frobenius = data.element_of(p % (data.f == 1 ? 1 : data.f));
            pl.decomposition = Subgroup::generated(data.group, {pl.frobenius});
        } else {
            // f = p^a m: inertia = units congruent to 1 mod m; the Frobenius
            // is any unit congruent to p mod m and 1 mod p^a
            std::uint64_t pa = 1;
            std::uint64_t m = data.f;
            while (m % p == 0) {
                m /= p;
                pa *= p;
            }
            std::vector<unsigned> gens;
            for (std::uint64_t a = 1; a < data.f; ++a)
                if (gcd_u64(a, data.f) == 1 && a % m == 1 % std::max<std::uint64_t>(m, 1))
                    gens.push_back(data.element_of(a));
            if (m > 1) {
                // CRT lift: c = p (mod m), c = 1 (mod p^a)
                std::uint64_t minv = inv_mod(pa % m, m);
                std::uint64_t c = (1 + pa * ((minv * ((p % m + m - 1) % m)) % m)) % data.f;
                pl.frobenius = data.element_of(c);
                gens.push_back(pl.frobenius);
            } else {
                pl.frobenius = data.group.identity();
            }
            pl.decomposition = Subgroup::generated(data.group, gens);
        }
        s.places.push_back(std::move(pl));
    }
    s.validate();
    return s;
}

unsigned order_of_vanishing(const Character& chi, const GaloisSetup& setup,
                            const std::vector<std::string>& s_labels) {
    require(!s_labels.empty(), "BadInput", "S must be non-empty");
    for (const auto& p : setup.places)
        if (p.archimedean)
            require(std::find(s_labels.begin(), s_labels.end(), p.label) != s_labels.end(),
                    "BadInput", "S must contain every archimedean place");
    unsigned total = 0;
    for (const auto& label : s_labels)
        total += fixed_space_dimension(chi, setup.place(label).decomposition);
    unsigned whole = fixed_space_dimension(chi, Subgroup::whole(setup.group));
    return total - whole;
}

namespace {

bool supported_by_condition_v(const GaloisSetup& setup, const Character& chi,
                              const std::vector<std::string>& complement) {
    if (chi.is_trivial()) return complement.size() == 1;
    for (const auto& label : complement)
        if (fixed_space_dimension(chi, setup.place(label).decomposition) != 0) return false;
    return true;
}

std::vector<std::string> set_difference(const std::vector<std::string>& s,
                                        const std::vector<std::string>& sigma1) {
    std::vector<std::string> out;
    for (const auto& label : s)
        if (std::find(sigma1.begin(), sigma1.end(), label) == sigma1.end())
            out.push_back(label);
    return out;
}

} // namespace

CentralElement splitting_idempotent(const GaloisSetup& setup,
                                    const std::vector<std::string>& s_labels,
                                    const std::vector<std::string>& sigma1_labels) {
    for (const auto& label : sigma1_labels)
        require(std::find(s_labels.begin(), s_labels.end(), label) != s_labels.end(),
                "BadSubset", "Sigma1 must lie inside S");
    std::vector<std::string> complement = set_difference(s_labels, sigma1_labels);
    require(!complement.empty(), "BadSubset", "Sigma1 must be a proper subset of S");
    std::vector<Cyclo> coords(setup.table.size(), Cyclo::zero());
    for (unsigned i = 0; i < setup.table.size(); ++i)
        if (supported_by_condition_v(setup, setup.table.irreducible(i), complement))
            coords[i] = Cyclo::one();
    return CentralElement(setup.table, std::move(coords));
}

IdempotentReport idempotent_equivalence_check(const GaloisSetup& setup,
                                              const std::vector<std::string>& s_labels,
                                              const std::vector<std::string>& sigma1_labels,
                                              unsigned char_index) {
    const Character& chi = setup.table.irreducible(char_index);
    std::vector<std::string> complement = set_difference(s_labels, sigma1_labels);
    require(!complement.empty(), "BadSubset", "Sigma1 must be a proper subset of S");

    IdempotentReport report;
    // (i) multiplicity of chi in X_{S \ Sigma1} is zero:
    //     sum over the complement of fixed dims, minus one if chi is trivial
    {
        long mult = 0;
        for (const auto& label : complement)
            mult += (long)fixed_space_dimension(chi, setup.place(label).decomposition);
        mult -= chi.is_trivial() ? 1 : 0;
        report.via_x_multiplicity = (mult == 0);
    }
    // (iv) the order of vanishing equals the Sigma1 fixed-dimension sum
    {
        unsigned expected = 0;
        for (const auto& label : sigma1_labels)
            expected += fixed_space_dimension(chi, setup.place(label).decomposition);
        report.via_vanishing_order = order_of_vanishing(chi, setup, s_labels) == expected;
    }
    // (v) the literal case condition
    report.via_fixed_spaces = supported_by_condition_v(setup, chi, complement);

    require(report.via_x_multiplicity == report.via_vanishing_order &&
                report.via_vanishing_order == report.via_fixed_spaces,
            "EquivalenceViolation", "the three support conditions disagree");
    return report;
}

} // namespace eqk
