#include "eqk/determinant_line.hpp"

namespace eqk {

TwoTermComplex TwoTermComplex::make(const RepSet& reps, const GAMatrix& phi,
                                    std::vector<std::uint64_t> integral_primes) {
    require(phi.rows() == phi.cols(), "BadInput", "two-term complexes are square here");
    require(phi.group().same_as(reps.group()), "BadInput", "matrix over a different group");
    for (auto p : integral_primes)
        for (unsigned i = 0; i < phi.rows(); ++i)
            for (unsigned j = 0; j < phi.cols(); ++j)
                for (const auto& c : phi.at(i, j).coeffs())
                    require(c.is_p_integral(p), "BadInput",
                            "declared integrality fails at " + std::to_string(p));
    TwoTermComplex c;
    c.reps = reps;
    c.rank = phi.rows();
    c.phi = phi;
    c.integral_primes = std::move(integral_primes);
    return c;
}

bool GradedLine::same_shape(const GradedLine& o) const {
    return table.same_as(o.table) && reference == o.reference && grading == o.grading;
}

GradedLine upsilon_basis(const TwoTermComplex& c, const GAMatrix& basis0,
                         const GAMatrix& basis1) {
    require(basis0.rows() == c.rank && basis0.cols() == c.rank && basis1.rows() == c.rank &&
                basis1.cols() == c.rank,
            "NotABasis", "basis matrices must match the rank");
    CentralElement n0 = reduced_norm(c.reps, basis0);
    CentralElement n1 = reduced_norm(c.reps, basis1);
    require(n0.is_invertible() && n1.is_invertible(), "NotABasis",
            "basis matrix is singular over the rational group algebra");
    GradedLine line;
    line.table = c.reps.table();
    line.scaling = n0 * n1.inverse();
    line.grading.assign(c.reps.table().size(), 0);   // equal ranks in both degrees
    return line;
}

bool primitive_equiv(const GradedLine& a, const GradedLine& b, std::uint64_t p) {
    require(a.table.same_as(b.table), "BadInput", "line elements over different tables");
    require(a.table.group().order() % p != 0, "BadPrime", "prime divides the group order");
    require(a.same_shape(b), "BadInput", "line elements of different shape");
    require(a.scaling.is_invertible() && b.scaling.is_invertible(), "Singular",
            "line elements must be invertible");
    return (b.scaling * a.scaling.inverse()).is_p_unit(p);
}

CentralElement acyclic_value(const TwoTermComplex& c) {
    CentralElement nrd = reduced_norm(c.reps, c.phi);
    require(nrd.is_invertible(), "Singular", "the complex is not acyclic");
    return nrd;
}

GradedLine zeta_element(const GradedLine& lambda, const CentralElement& x) {
    require(lambda.scaling.is_invertible(), "Singular", "trivialization is singular");
    require(x.is_invertible(), "Singular", "special value must be invertible");
    GradedLine z = lambda;
    z.scaling = x * lambda.scaling.inverse();
    return z;
}

bool ker_delta_test(const CentralElement& x, const std::vector<std::uint64_t>& primes) {
    require(x.is_invertible(), "Singular", "kernel test needs an invertible element");
    require(x.is_rational(), "BadInput", "kernel test needs a rational central element");
    for (auto p : primes) {
        require(x.table().group().order() % p != 0, "BadPrime",
                "prime divides the group order");
        if (!x.is_p_unit(p)) return false;
    }
    return true;
}

bool hsm_membership(const CentralElement& x) {
    require(x.is_invertible(), "Singular", "positivity gate needs an invertible element");
    const CharacterTable& t = x.table();
    for (unsigned i = 0; i < t.size(); ++i) {
        if (frobenius_schur(t.irreducible(i)) != -1) continue;
        const Cyclo& coord = x.coord(i);
        require(coord.is_real(), "NotReal",
                "symplectic coordinate is not fixed by conjugation");
        std::uint64_t n = coord.conductor();
        for (std::uint64_t a = 1; a < std::max<std::uint64_t>(n, 2); ++a) {
            if (gcd_u64(a, n) != 1) continue;
            if (certified_sign(coord, a).sign != Sign::Positive) return false;
        }
    }
    return true;
}

} // namespace eqk
