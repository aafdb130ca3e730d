#pragma once

#include <json.hpp>

#include "ordot/barycentric.hpp"
#include "ordot/lawvere.hpp"

namespace ordot::io {

/// Reports keep insertion order so byte-identical output is reproducible.
using Json = nlohmann::ordered_json;

/// Rational from JSON: a "p/q" string, or an integer. Non-integer numbers
/// are accepted only in approximate mode (converted exactly from binary).
Q parse_rational(const Json& j, const NumericMode& mode);
Json rational_json(const Q& v);

/// { "points": [...], "dist": [[...]], "leq": [[...]] }
SpacePtr parse_space(const Json& j, const NumericMode& mode);
Json space_json(const Space& s);

/// { "points": [...], "dl": [[...]] }
LawvereSpace parse_lawvere(const Json& j, const NumericMode& mode);
Json lawvere_json(const LawvereSpace& s);

/// { "weights": { "<point>": "p/q", ... } }; "space" may name the loaded space
Measure parse_measure(const Json& j, SpacePtr base);
Json measure_json(const Measure& m);

/// { "points": ["u", "u", "v"] }
Tuple parse_tuple(const Json& j, const Space& base);

/// { "points": [["u","w"], ...] }
PairTuple parse_pair_tuple(const Json& j, const Space& x, const Space& y);

/// { "dim": n, "rows": [[...]], "domain": [{"row": [...], "rhs": ...}] }
ConeSpace parse_cone_space(const Json& j, const NumericMode& mode);

Vec parse_vec(const Json& j, int dim, const NumericMode& mode);
Json vec_json(const Vec& v);

/// { "atoms": [[...]], "weights": [...] }
PointMeasure parse_point_measure(const Json& j, const ConeSpace& space);

/// Tabulated function { "entries": [{"x": [...], "fx": [...]}] }; lookup is
/// exact, evaluation outside the table throws.
struct MapTable {
  std::vector<std::pair<Vec, Vec>> entries;
  int out_dim = 0;
  VecFn fn() const;
};
MapTable parse_map_table(const Json& j, int in_dim, const NumericMode& mode);

}  // namespace ordot::io
