#pragma once

#include <map>
#include <optional>
#include <string>

#include "eqk/chartable.hpp"

namespace eqk {

// A dense matrix over cyclotomic numbers (row major).
using CycloMatrix = std::vector<std::vector<Cyclo>>;

CycloMatrix cyclo_identity(unsigned n);
CycloMatrix cyclo_mat_mul(const CycloMatrix& a, const CycloMatrix& b);
Cyclo cyclo_mat_det(CycloMatrix m);
Cyclo cyclo_mat_trace(const CycloMatrix& m);

// An explicit irreducible matrix representation: one degree x degree matrix
// per group element, with trace matching the character.
struct IrredRep {
    FiniteGroup group;
    unsigned char_index = 0;   // position in the owning table
    unsigned degree = 0;
    std::vector<CycloMatrix> matrices;   // per group element

    const CycloMatrix& at(unsigned g) const { return matrices[g]; }
};

// rho(g) = [chi(g)] for a degree-one character; NotLinear otherwise.
IrredRep rep_for_linear(const CharacterTable& t, unsigned char_index);

// Monomial induction of a linear character of a subgroup along an ordered
// transversal. Returns the representation when the induced character is
// irreducible; otherwise irreducible=false and the rep field is unspecified.
// lambda_on_h holds the character value per element of h.group.
struct MonomialInduction {
    bool irreducible = false;
    IrredRep rep;
};
MonomialInduction monomial_induce(const CharacterTable& table_of_g,
                                  const EmbeddedSubgroup& h,
                                  const std::vector<Cyclo>& lambda_on_h,
                                  const std::vector<unsigned>& transversal);

// Exhaustive check of the representation invariants: multiplicativity on all
// pairs, identity at the identity, trace equal to the character.
bool verify_rep(const IrredRep& rep, const CharacterTable& t);

// The pinned system of representations for every irreducible of a table:
// linear characters directly, higher degrees by a deterministic monomial
// search over the subgroup lattice, Galois conjugates by twisting a fixed
// orbit representative (so conjugate coordinates stay Galois-equivariant).
// Non-monomial irreducibles must be supplied by the caller (validated here);
// MissingRep if one is neither found nor supplied.
class RepSet {
public:
    RepSet() = default;
    static RepSet build(const CharacterTable& t,
                        const std::map<unsigned, std::vector<CycloMatrix>>& user_reps = {});

    const CharacterTable& table() const;
    const FiniteGroup& group() const { return table().group(); }
    const IrredRep& rep(unsigned char_index) const;

    // rho_chi applied to a group-algebra element.
    CycloMatrix apply(unsigned char_index, const GAElement& x) const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// Built-in groups with pinned tables and representations, keyed by short
// names: "cN" (cyclic), "v4", "s3", "d4", "q8", "a4", "s4", "d5". Entries are
// constructed once and shared; lookups are thread-safe.
struct CatalogEntry {
    std::string name;
    FiniteGroup group;
    CharacterTable table;
    RepSet reps;
};
const CatalogEntry& catalog(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace eqk
