#pragma once

#include <json.hpp>

#include "preord/group_algebra.hpp"
#include "preord/topology.hpp"

namespace preord {

using json = nlohmann::json;

// Rationals travel as "p/q" strings (integers also accepted on input).
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

// Field scalars as ["p/q", "p/q"] pairs (rational part, sqrt-D part); bare
// rationals accepted on input.
json quadext_to_json(const QuadExt& x);
QuadExt quadext_from_json(const json& j);

RatVec ratvec_from_json(const json& j);
json ratvec_to_json(const RatVec& v);

// Group elements as arrays of integers (strings accepted for big values).
json gvec_to_json(const GVec& v);
GVec gvec_from_json(const json& j);

// {"n": 2, "D": 2, "rows": [[entry, ...], ...]}.  A "D" different from the
// active field radicand is rejected.
json matrix_preorder_to_json(const MatrixPreorder& p, bool canonical_rows = false);
MatrixPreorder matrix_preorder_from_json(const json& j);

json group_to_json(const GroupDesc& g);
GroupDesc group_from_json(const json& j);

// {"variant": "trivial" | "abelianized" | "composite" | "left-lex", ...}
json layered_to_json(const LayeredPreorder& p);
LayeredPreorder layered_from_json(const json& j);

// Dispatches on shape: a "variant" key means layered (Heisenberg), otherwise
// a weight preorder on Z^n.
json group_preorder_to_json(const GroupPreorder& p);
GroupPreorder group_preorder_from_json(const json& j);

json lattice_to_json(const IntLattice& l);

// {"group": ..., "terms": [{"coeff": "p/q", "g": [...]}, ...]}
json algebra_to_json(const GroupAlgebraElement& x);
GroupAlgebraElement algebra_from_json(const json& j);

// {"topology": "Z"|"I"|"P", "prims": [{"kind": "O"|"U", "g": [...]}, ...]};
// the topology tag is optional on input and inferred from the generators.
json open_to_json(const BasicOpen& s);
BasicOpen open_from_json(const json& j);

json value_to_json(const Value& v);
Value value_from_json(const json& j);

json ordering_to_json(Ordering o);

// CLI argument helper: inline JSON if it parses, else a path to a JSON file.
json load_json_arg(const std::string& arg);

}  // namespace preord
