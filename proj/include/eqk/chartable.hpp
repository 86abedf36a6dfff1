#pragma once

#include <memory>
#include <vector>

#include "eqk/group_algebra.hpp"

namespace eqk {

// A class function with one cyclotomic value per conjugacy class.
using ClassFunction = std::vector<Cyclo>;

// <f, g> = |G|^-1 sum_x f(x) g(x^-1), the exact inner product under which
// irreducible characters are orthonormal.
Cyclo class_function_inner(const FiniteGroup& g, const ClassFunction& f,
                           const ClassFunction& h);

struct Character {
    FiniteGroup group;
    ClassFunction values;      // indexed by conjugacy class
    unsigned degree = 0;       // = values[identity class]

    const Cyclo& at_class(unsigned cls) const { return values[cls]; }
    const Cyclo& at_element(unsigned g) const { return values[group.class_of(g)]; }
    bool is_trivial() const;
};

// Exact character table, computed by class-sum diagonalization over a prime
// field F_l with l = 1 (mod exp G), l > 2 sqrt(|G|), lifted to Q(zeta_exp(G))
// and verified against the orthogonality relations before being returned
// (LiftFailure on any internal inconsistency). Irreducibles are sorted by
// (degree, lexicographic values) for reproducibility.
class CharacterTable {
public:
    CharacterTable() = default;
    static CharacterTable compute(const FiniteGroup& g);

    bool same_as(const CharacterTable& o) const { return d_ == o.d_; }
    const FiniteGroup& group() const;
    unsigned size() const;
    const Character& irreducible(unsigned i) const;
    const std::vector<Character>& irreducibles() const;

    unsigned trivial_index() const;
    // Index of the contragredient character (values at inverse classes).
    unsigned contragredient(unsigned i) const;
    // Index of the Galois conjugate: values twisted by zeta -> zeta^a,
    // gcd(a, exp G) = 1.
    unsigned galois_conjugate(unsigned i, std::uint64_t a) const;

    // Exact multiplicities of a class function in the irreducible basis;
    // NotIntegral if the function is not a virtual character combination.
    std::vector<Int> decompose(const ClassFunction& f) const;

    struct Data;   // definition private to chartable.cpp

private:
    std::shared_ptr<const Data> d_;

    unsigned index_of_values(const ClassFunction& v, const char* what) const;
};

// |H|^-1 sum_{h in H} chi(h), the dimension of the H-fixed subspace of a
// representation affording chi; NotIntegral flags corrupted character data.
unsigned fixed_space_dimension(const Character& chi, const Subgroup& h);

// e_chi = chi(1)|G|^-1 sum_g chi(g) g^-1.
GAElement central_idempotent(const Character& chi);

// Frobenius-Schur indicator |G|^-1 sum_g chi(g^2), in {-1, 0, +1}.
int frobenius_schur(const Character& chi);

// An element of the centre in Wedderburn coordinates: one value per
// irreducible character of the table, z = sum_chi coord_chi e_chi.
class CentralElement {
public:
    CentralElement() = default;
    CentralElement(const CharacterTable& t, std::vector<Cyclo> coords);

    static CentralElement one(const CharacterTable& t);
    static CentralElement from_rational(const CharacterTable& t, const Rat& q);

    const CharacterTable& table() const { return table_; }
    const Cyclo& coord(unsigned i) const { return coords_[i]; }
    const std::vector<Cyclo>& coords() const { return coords_; }

    CentralElement operator*(const CentralElement& o) const;
    CentralElement operator+(const CentralElement& o) const;
    CentralElement operator-(const CentralElement& o) const;
    CentralElement scaled(const Cyclo& c) const;
    bool operator==(const CentralElement& o) const;
    bool operator!=(const CentralElement& o) const { return !(*this == o); }

    bool is_invertible() const;
    CentralElement inverse() const;    // Singular if any coordinate vanishes

    // Galois-equivariant coordinates (act(a, z_chi) = z_{chi^a} for all a
    // coprime to exp G), i.e. the element lies in the rational centre.
    bool is_rational() const;
    // Coordinate permutation induced by g -> g^-1 on the group algebra.
    CentralElement involution() const;

    // Every coordinate a p-unit (the value and its inverse both p-integral).
    bool is_p_unit(std::uint64_t p) const;

    GAElement to_group_algebra() const;

private:
    CharacterTable table_;
    std::vector<Cyclo> coords_;
};

// Wedderburn coordinates of a central group-algebra element (NotCentral if z
// fails to commute with the group); inverse of CentralElement::to_group_algebra.
CentralElement wedderburn_coords(const CharacterTable& t, const GAElement& z);

// Character-level functoriality. Induction needs the subgroup materialized
// as a group in its own right together with the embedding.
struct EmbeddedSubgroup {
    FiniteGroup group;                 // abstract copy of H
    std::vector<unsigned> to_parent;   // H-element -> parent element
    FiniteGroup parent;
};
EmbeddedSubgroup materialize(const Subgroup& h);

// Ind_H^G f as a class function on G.
ClassFunction induce_class_function(const FiniteGroup& g, const EmbeddedSubgroup& h,
                                    const ClassFunction& f_on_h);
// Res_H f as a class function on the materialized subgroup.
ClassFunction restrict_class_function(const EmbeddedSubgroup& h, const ClassFunction& f_on_g);
// Inflation along a surjection pi: G -> Q of a class function on Q.
ClassFunction inflate_class_function(const GroupHom& pi, const ClassFunction& f_on_q);

} // namespace eqk
