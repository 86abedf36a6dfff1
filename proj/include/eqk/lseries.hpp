#pragma once

#include <string>

#include "eqk/chartable.hpp"

namespace eqk {

// A Dirichlet character modulo f: totally multiplicative on units, zero off
// them, values roots of unity. Carries its conductor and the primitive
// character it is induced by.
class DirichletCharacter {
public:
    DirichletCharacter() = default;
    DirichletCharacter(std::uint64_t modulus, std::vector<Cyclo> values_on_residues);

    std::uint64_t modulus() const { return f_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == f_; }
    bool is_trivial() const;
    bool is_odd() const;    // chi(-1) = -1

    // value at a residue mod f (zero off units)
    const Cyclo& value(std::uint64_t a) const { return values_[a % f_]; }
    // value of the inducing primitive character at a (zero only when
    // gcd(a, conductor) > 1)
    Cyclo primitive_value(std::uint64_t a) const;

    bool operator==(const DirichletCharacter& o) const;

private:
    std::uint64_t f_ = 1;
    std::uint64_t conductor_ = 1;
    std::vector<Cyclo> values_;
};

// The multiplicative group (Z/f)^x as a FiniteGroup, with the dictionary
// between abstract element indices and unit residues, its character table,
// and the induced Dirichlet characters (one per table irreducible, in table
// order). Rejects f = 2 (mod 4), where Q(zeta_f) duplicates a smaller field.
struct CyclotomicData {
    std::uint64_t f = 1;
    FiniteGroup group;
    CharacterTable table;
    std::vector<std::uint64_t> residue;            // element index -> residue
    std::vector<unsigned> element_of_residue;      // residue -> element index
    std::vector<DirichletCharacter> characters;    // per table index

    static CyclotomicData build(std::uint64_t f);
    unsigned element_of(std::uint64_t a) const;    // InvalidUnit off units
};

// B_{1,chi} = f^{-1} sum_{a=1..f} chi(a) a, evaluated literally at the given
// modulus.
Cyclo bernoulli_b1(const DirichletCharacter& chi);

// L(chi, 0) of the inducing primitive character: -B_1 of it, with the
// convention zeta(0) = -1/2 for the trivial character.
Cyclo l_value_at_0(const DirichletCharacter& chi);

// L_{S,T}(chi, 0) = prod_{q in T} (1 - chi0(q) q) * prod_{p in S}
// (1 - chi0(p)) * L(chi0, 0) over the rationals, where chi0 is the inducing
// primitive character, S lists the finite places of the truncation set and T
// the modification set. SetOverlap if S and T meet.
Cyclo dirichlet_l_value(const DirichletCharacter& chi, const std::vector<std::uint64_t>& s_primes,
                        const std::vector<std::uint64_t>& t_primes);

// Stickelberger element of the cyclotomic setup: theta = sum_chi
// L_{S,T}(contragredient chi, 0) e_chi. S always implicitly contains the
// archimedean place; its finite part must contain the primes dividing f.
struct StickelbergerElement {
    CentralElement central;
    GAElement coefficients;        // expansion in the group-element basis
    std::vector<std::uint64_t> s_primes;
    std::vector<std::uint64_t> t_primes;
    bool rational = true;
};
StickelbergerElement stickelberger(const CyclotomicData& data,
                                   const std::vector<std::uint64_t>& s_primes,
                                   const std::vector<std::uint64_t>& t_primes);

// Non-abelian assembly from supplied values (one per irreducible):
// sum_chi values[contragredient(chi)] e_chi; rationality is reported in the
// result, never enforced.
StickelbergerElement stickelberger_assemble(const CharacterTable& t,
                                            const std::vector<Cyclo>& values);

// True when the T-modification forces integral group-ring coefficients:
// every q in T odd and coprime to f (no nontrivial root of unity of Q(zeta_f)
// is congruent to 1 at q).
bool admissible_t(std::uint64_t f, const std::vector<std::uint64_t>& t_primes);

// ---------------------------------------------------------------------------
// abstract Galois data

struct Place {
    std::string label;
    bool archimedean = false;
    Subgroup decomposition;
    unsigned frobenius = 0;        // meaningful for non-archimedean places
    std::uint64_t norm = 0;        // residue norm, non-archimedean only
};

struct GaloisSetup {
    FiniteGroup group;
    CharacterTable table;
    std::vector<Place> places;

    const Place& place(const std::string& label) const;
    bool has_place(const std::string& label) const;
    void validate() const;   // label uniqueness, Frobenius membership

    // the full setup of Q(zeta_f)/Q with places "inf" and one per listed
    // prime (ramified primes get inertia-generated decomposition groups)
    static GaloisSetup cyclotomic(const CyclotomicData& data,
                                  const std::vector<std::uint64_t>& finite_primes);
};

// ord_{z=0} of the S-truncated L-function of chi: sum over v in S of
// dim V_chi^{G_v}, minus one for the trivial character. S must contain every
// archimedean place label of the setup and be non-empty.
unsigned order_of_vanishing(const Character& chi, const GaloisSetup& setup,
                            const std::vector<std::string>& s_labels);

// The splitting idempotent attached to S and a proper subset Sigma1: the sum
// of e_chi over characters supported by the vanishing condition (a nontrivial
// chi needs V^{G_v} = 0 at every v in S minus Sigma1; the trivial character
// needs |S minus Sigma1| = 1). BadSubset unless Sigma1 is a proper subset.
CentralElement splitting_idempotent(const GaloisSetup& setup,
                                    const std::vector<std::string>& s_labels,
                                    const std::vector<std::string>& sigma1_labels);

// Three independent routes to the support condition; EquivalenceViolation if
// they ever disagree (they are provably equivalent, so disagreement means an
// implementation bug).
struct IdempotentReport {
    bool via_x_multiplicity = false;   // e_chi X_{S \ Sigma1} vanishes
    bool via_vanishing_order = false;  // ord = sum over Sigma1 of fixed dims
    bool via_fixed_spaces = false;     // the literal case condition
};
IdempotentReport idempotent_equivalence_check(const GaloisSetup& setup,
                                              const std::vector<std::string>& s_labels,
                                              const std::vector<std::string>& sigma1_labels,
                                              unsigned char_index);

} // namespace eqk
