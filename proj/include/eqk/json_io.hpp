#pragma once

#include <json.hpp>

#include "eqk/derivative.hpp"
#include "eqk/determinant_line.hpp"
#include "eqk/lseries.hpp"
#include "eqk/tower.hpp"

namespace eqk {

using Json = nlohmann::ordered_json;

// CycloNumber: {"conductor": n, "coeffs": ["p/q", ...]} in power-basis order
Json to_json(const Cyclo& x);
Cyclo cyclo_from_json(const Json& j);

// groups: {"order": n, "table": [[...]], "labels": [...]} or
// {"perm_gens": [[...]]} or {"invariant_factors": [...]} or {"name": "s3"}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// group-algebra element: object keyed by element index
Json to_json(const GAElement& x);
GAElement ga_element_from_json(const FiniteGroup& g, const Json& j);

// {"rows": r, "cols": c, "entries": [[{element_index: CycloNumber}]]}
Json to_json(const GAMatrix& m);
GAMatrix ga_matrix_from_json(const FiniteGroup& g, const Json& j);

// table export: classes, degrees, values (stable order)
Json to_json(const CharacterTable& t);

// {"group": ..., "char_index": i, "matrices": {element: [[CycloNumber]]}}
Json rep_bundle_to_json(const RepSet& reps, unsigned char_index);

Json to_json(const CentralElement& z);

// {"group": ..., "places": [{"label","arch","decomp","frob","norm"}]}
Json to_json(const GaloisSetup& s);
GaloisSetup setup_from_json(const Json& j);

// per-character coordinate arrays
Json to_json(const WedgeElement& w);

// {"conductors": [...], "extra_S": [[...]], "T": [...]}
CyclotomicTower tower_from_json(const Json& j);

// {"delta": <group>, "p": p, "depth": n, "values": [[<ga element>...]]} or a
// constructed family {"family": {"base": <ga element>, "order": k,
// "gamma": a}}
struct ProductTowerInput {
    ProductTower tower;
    std::vector<ProductValue> values;
};
ProductTowerInput product_tower_from_json(const Json& j);

} // namespace eqk
