#pragma once

#include <optional>

#include "eqk/rep.hpp"

namespace eqk {

// Reduced norm of a square matrix over the group algebra: per irreducible
// chi, the determinant of the (n*deg) x (n*deg) matrix obtained by applying
// rho_chi entrywise. Multiplicative by construction.
CentralElement reduced_norm(const RepSet& reps, const GAMatrix& m);
// Reduced norm over the opposite algebra: Nrd_{A^op}(X) = Nrd_A(X^tr).
CentralElement reduced_norm_op(const RepSet& reps, const GAMatrix& m);

// A finitely generated module over the group algebra, realized as E^N with an
// explicit G-action. Cheap shared handle; per-character multiplicity-space
// data is computed once at construction.
//
// Free modules A^d use the block structure E^{d|G|} (block j = coefficients
// of the j-th coordinate) with the left regular action.
class GAModule {
public:
    GAModule() = default;
    static GAModule free_module(const RepSet& reps, unsigned rank);
    // action[g] is the N x N matrix of g on E^N
    static GAModule from_action(const RepSet& reps, std::vector<CycloMatrix> action);

    bool same_as(const GAModule& o) const { return d_ == o.d_; }
    const RepSet& reps() const;
    const FiniteGroup& group() const { return reps().group(); }
    unsigned dim() const;                      // N
    std::optional<unsigned> free_rank() const; // set for free_module

    // action of an algebra element on a vector
    std::vector<Cyclo> act(const GAElement& x, const std::vector<Cyclo>& v) const;
    // embedding of free coordinates (length = free rank) into E^N
    std::vector<Cyclo> vector_of(const std::vector<GAElement>& coords) const;
    std::vector<Cyclo> basis_vector(unsigned j) const;   // b_j of a free module

    // multiplicity of the chi-isotypic simple module in M
    unsigned multiplicity(unsigned char_index) const;
    // coordinate row block of an element in the chi multiplicity space:
    // a deg x mult matrix, row j = coordinates of u_{1j} * v
    CycloMatrix component_rows(unsigned char_index, const std::vector<Cyclo>& v) const;
    // the t-th vector of the pinned multiplicity-space basis, in E^N
    std::vector<Cyclo> basis_of_multiplicity(unsigned char_index, unsigned t) const;

    struct Data;

private:
    std::shared_ptr<const Data> d_;
};

// An A-linear map M -> A, stored as the E-linear matrix F (|G| x N) over the
// group-algebra basis {e_g}. Equivariance is by construction for the built-in
// factories; validate() checks it explicitly for external input.
struct ModuleHom {
    GAModule module;
    CycloMatrix f;

    // free module: phi(v) = sum_j v_j * images[j] (right coefficients)
    static ModuleHom on_free(const GAModule& m, const std::vector<GAElement>& images);
    // the i-th dual basis functional of a free module
    static ModuleHom dual_basis(const GAModule& m, unsigned i);

    std::vector<Cyclo> operator()(const std::vector<Cyclo>& v) const;   // into E^{|G|}
    GAElement apply_as_algebra(const std::vector<Cyclo>& v) const;
    bool validate() const;
};

// The dual basis of a free module, in order.
std::vector<ModuleHom> dual_basis_homs(const GAModule& m);
// b_i^* after an endomorphism given by its row-image matrix c (phi(b_j) =
// sum_i c[j][i] b_i): the hom v -> (phi(v))_i.
ModuleHom row_functional(const GAModule& m, const GAMatrix& c, unsigned i);

// An element of the degree-r reduced exterior power of M: per irreducible
// chi, the coordinate vector in wedge^{r*deg} of the multiplicity space,
// indexed by lexicographically sorted subsets.
class WedgeElement {
public:
    WedgeElement() = default;
    WedgeElement(GAModule m, unsigned degree, std::vector<std::vector<Cyclo>> coords);

    const GAModule& module() const { return module_; }
    unsigned degree() const { return degree_; }
    const std::vector<Cyclo>& coords(unsigned char_index) const { return coords_[char_index]; }

    bool is_zero() const;
    bool operator==(const WedgeElement& o) const;
    bool operator!=(const WedgeElement& o) const { return !(*this == o); }
    WedgeElement operator+(const WedgeElement& o) const;
    WedgeElement scaled(const CentralElement& z) const;
    WedgeElement scaled(const Cyclo& c) const;

    // degree-0 elements are central elements
    CentralElement as_central() const;

private:
    GAModule module_;
    unsigned degree_ = 0;
    std::vector<std::vector<Cyclo>> coords_;
};

// Same shape for elements of the exterior powers of Hom_A(M, A) over A^op.
class DualWedgeElement {
public:
    DualWedgeElement() = default;
    DualWedgeElement(GAModule m, unsigned degree, std::vector<std::vector<Cyclo>> coords);

    const GAModule& module() const { return module_; }
    unsigned degree() const { return degree_; }
    const std::vector<Cyclo>& coords(unsigned char_index) const { return coords_[char_index]; }

private:
    GAModule module_;
    unsigned degree_ = 0;
    std::vector<std::vector<Cyclo>> coords_;
};

// wedge of r module elements (r = 0 gives the central identity)
WedgeElement wedge(const GAModule& m, const std::vector<std::vector<Cyclo>>& elements);
// convenience for free modules: elements given by A-coordinates
WedgeElement wedge_free(const GAModule& m, const std::vector<std::vector<GAElement>>& elements);
// wedge of r homomorphisms M -> A
DualWedgeElement dual_wedge(const GAModule& m, const std::vector<ModuleHom>& homs);

// duality pairing: degree-s dual against degree-r wedge, r >= s
// (DegreeMismatch otherwise); full contraction at r = s gives the reduced
// norm of the Gram matrix as a degree-0 element.
WedgeElement pair_contract(const DualWedgeElement& phi, const WedgeElement& x);

// (wedge of homs)(x) as a central element (the evaluation pairing at full
// degree).
CentralElement evaluation_image(const WedgeElement& x, const std::vector<ModuleHom>& homs);

// Membership in the degree-r Rubin lattice at a prime p coprime to |G|:
// every evaluation against r-subsets of the generating homomorphisms is
// p-integral in each coordinate. BadPrime if p divides |G|.
bool rubin_membership(const WedgeElement& x, const std::vector<ModuleHom>& generating_homs,
                      std::uint64_t p);

// x = (wedge_{i in I} b_i^* compose phi)(wedge_{j in [d]} b_j) on a free
// module of rank d = phi.rows(), for an ordered index subset I of [d]
// (IndexOutOfRange otherwise); degree d - |I|.
WedgeElement element_construction(const GAModule& m, const GAMatrix& phi,
                                  const std::vector<unsigned>& index_set);
// the wedge of the standard basis of a free module
WedgeElement basis_wedge(const GAModule& m);

// Subset utilities shared with tests: lexicographically ordered k-subsets of
// {0,...,m-1} and the position of one subset in that order.
std::vector<std::vector<unsigned>> sorted_subsets(unsigned m, unsigned k);
unsigned subset_position(unsigned m, const std::vector<unsigned>& subset);

} // namespace eqk
