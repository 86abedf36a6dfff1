#pragma once

#include "eqk/wedge.hpp"

namespace eqk {

// A two-term complex of free modules [A^d --phi--> A^d] (first term in degree
// zero), with phi given by its row-image matrix and a declared set of primes
// at which the coefficients are integral (checked at construction).
struct TwoTermComplex {
    RepSet reps;
    unsigned rank = 0;
    GAMatrix phi;
    std::vector<std::uint64_t> integral_primes;

    static TwoTermComplex make(const RepSet& reps, const GAMatrix& phi,
                               std::vector<std::uint64_t> integral_primes = {});
};

// An element of the determinant line of a two-term complex, recorded as a
// central scaling of a named reference basis together with its grading.
struct GradedLine {
    CharacterTable table;
    std::string reference = "standard";
    CentralElement scaling;
    std::vector<int> grading;     // per irreducible

    bool same_shape(const GradedLine& o) const;
};

// Upsilon of a pair of ordered bases, each given by the matrix expressing it
// in the distinguished (standard) bases: the line element with scaling
// Nrd(U0) * Nrd(U1)^{-1}. NotABasis if either matrix is singular over the
// rational group algebra.
GradedLine upsilon_basis(const TwoTermComplex& c, const GAMatrix& basis0,
                         const GAMatrix& basis1);

// Whether two line elements differ by a unit that is a p-unit in every
// coordinate (the computable reduced-norm K1 test at a prime not dividing
// |G|; BadPrime otherwise).
bool primitive_equiv(const GradedLine& a, const GradedLine& b, std::uint64_t p);

// The canonical trivialization value of an acyclic two-term complex: Nrd(phi)
// (Singular when phi is not invertible over the rational group algebra).
CentralElement acyclic_value(const TwoTermComplex& c);

// The unique line element z with lambda(z) = (x, 0), for a trivialization
// lambda given by the image of the reference basis. Singular if lambda or x
// fails to be invertible.
GradedLine zeta_element(const GradedLine& lambda, const CentralElement& x);

// Kernel test for the extended boundary map at good primes: a rational
// invertible central element passes iff every coordinate is a p-unit for
// every listed prime (each prime must not divide |G|).
bool ker_delta_test(const CentralElement& x, const std::vector<std::uint64_t>& primes);

// Positivity gate at the symplectic characters: true iff every coordinate at
// a character with Frobenius-Schur indicator -1 has a certified positive sign
// under every real embedding. NotReal if such a coordinate is not totally
// real; the element must be invertible.
bool hsm_membership(const CentralElement& x);

} // namespace eqk
