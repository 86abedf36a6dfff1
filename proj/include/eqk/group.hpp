#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eqk/error.hpp"

namespace eqk {

// Default cap on group orders accepted by the builders; override with the
// EQK_MAX_GROUP_ORDER environment variable or set_max_group_order().
unsigned max_group_order();
void set_max_group_order(unsigned cap);

// A finite group as an explicit multiplication table. Group axioms are
// verified at construction (NotAGroup). The class is a cheap handle onto
// immutable shared data: copies share, and everything that references a
// group (subgroups, homomorphisms, characters, algebra elements) stores the
// handle by value, so lifetimes take care of themselves.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::vector<std::vector<unsigned>> table,
                                  std::vector<std::string> labels = {});
    // Permutations given as image vectors on {0,...,m-1}; the group is the
    // closure under composition (a*b means apply b, then a).
    static FiniteGroup from_permutations(const std::vector<std::vector<unsigned>>& gens);
    // Abelian group C_{d1} x C_{d2} x ...
    static FiniteGroup from_invariant_factors(const std::vector<unsigned>& factors);

    static FiniteGroup cyclic(unsigned n);
    static FiniteGroup dihedral(unsigned n);      // order 2n
    static FiniteGroup quaternion8();
    static FiniteGroup symmetric(unsigned n);     // n <= 5
    static FiniteGroup alternating4();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    bool valid() const { return d_ != nullptr; }
    bool same_as(const FiniteGroup& o) const { return d_ == o.d_; }

    unsigned order() const;
    unsigned identity() const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inverse(unsigned a) const;
    unsigned conjugate(unsigned g, unsigned x) const;    // g x g^{-1}
    unsigned element_order(unsigned g) const;
    unsigned exponent() const;
    bool is_abelian() const;

    const std::vector<std::string>& labels() const;
    const std::vector<std::vector<unsigned>>& table() const;

    // Conjugacy classes sorted by (size, least element); identity class first.
    const std::vector<std::vector<unsigned>>& conjugacy_classes() const;
    unsigned class_of(unsigned g) const;
    unsigned num_classes() const { return (unsigned)conjugacy_classes().size(); }
    unsigned class_of_power(unsigned class_index, std::uint64_t t) const;
    unsigned inverse_class(unsigned class_index) const;

    struct Data;   // definition private to group.cpp

private:
    std::shared_ptr<const Data> d_;
    explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// A subgroup as a sorted element set, closed and containing the identity.
struct Subgroup {
    FiniteGroup parent;
    std::vector<unsigned> elements;

    static Subgroup generated(const FiniteGroup& g, const std::vector<unsigned>& gens);
    static Subgroup trivial(const FiniteGroup& g);
    static Subgroup whole(const FiniteGroup& g);

    std::size_t order() const { return elements.size(); }
    bool contains(unsigned g) const;
    bool is_normal() const;
    bool is_cyclic() const;
    // Sorted minimal left-coset representatives.
    std::vector<unsigned> left_transversal() const;
};

// A homomorphism checked to respect multiplication.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<unsigned> images;

    GroupHom() = default;
    GroupHom(const FiniteGroup& s, const FiniteGroup& t, std::vector<unsigned> im);

    unsigned operator()(unsigned g) const { return images[g]; }
    bool is_surjective() const;
    std::vector<unsigned> kernel() const;
};

// Quotient by a normal subgroup, with the canonical surjection. NotNormal if
// the subgroup is not normal.
std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n);

// Every subgroup, sorted by (order, element list); exponential in the worst
// case but fine at the orders this kernel accepts.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

} // namespace eqk
