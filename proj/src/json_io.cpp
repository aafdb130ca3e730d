#include "ordot/json_io.hpp"

#include <stdexcept>

namespace ordot::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Q parse_rational(const Json& j, const NumericMode& mode) {
  if (j.is_string()) {
    auto v = q_parse(j.get<std::string>());
    if (!v) fail("malformed rational '" + j.get<std::string>() + "'");
    return *v;
  }
  if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) {
    if (mode.exact) fail("rational strings are mandatory in exact mode");
    return Q(j.get<double>());
  }
  fail("expected a rational");
}

Json rational_json(const Q& v) { return q_str(v); }

SpacePtr parse_space(const Json& j, const NumericMode& mode) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) fail("'points' must be a nonempty array");
  std::vector<std::string> points;
  for (const Json& p : pts) points.push_back(p.get<std::string>());
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (points[i] == points[k]) fail("duplicate point label '" + points[i] + "'");
  const Json& dj = field(j, "dist");
  const Json& lj = field(j, "leq");
  if (static_cast<int>(dj.size()) != n || static_cast<int>(lj.size()) != n)
    fail("matrix size does not match point count");
  Mat<Q> dist(n, n);
  Mat<uint8_t> leq(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dj.at(i).size()) != n || static_cast<int>(lj.at(i).size()) != n)
      fail("matrix row size does not match point count");
    for (int k = 0; k < n; ++k) {
      dist(i, k) = parse_rational(dj.at(i).at(k), mode);
      leq(i, k) = lj.at(i).at(k).get<bool>() ? 1 : 0;
    }
  }
  return make_space(std::move(points), std::move(dist), std::move(leq), mode);
}

Json space_json(const Space& s) {
  Json j;
  j["points"] = s.points;
  Json dist = Json::array(), leq = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json drow = Json::array(), lrow = Json::array();
    for (int k = 0; k < s.size(); ++k) {
      drow.push_back(rational_json(s.d(i, k)));
      lrow.push_back(s.le(i, k));
    }
    dist.push_back(std::move(drow));
    leq.push_back(std::move(lrow));
  }
  j["dist"] = std::move(dist);
  j["leq"] = std::move(leq);
  return j;
}

LawvereSpace parse_lawvere(const Json& j, const NumericMode& mode) {
  const Json& pts = field(j, "points");
  LawvereSpace s;
  s.mode = mode;
  for (const Json& p : pts) s.points.push_back(p.get<std::string>());
  const int n = s.size();
  if (n == 0) fail("'points' must be a nonempty array");
  const Json& dj = field(j, "dl");
  if (static_cast<int>(dj.size()) != n) fail("matrix size does not match point count");
  s.dl = Mat<Q>(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dj.at(i).size()) != n) fail("matrix row size mismatch");
    for (int k = 0; k < n; ++k) s.dl(i, k) = parse_rational(dj.at(i).at(k), mode);
  }
  return s;
}

Json lawvere_json(const LawvereSpace& s) {
  Json j;
  j["points"] = s.points;
  Json dl = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < s.size(); ++k) row.push_back(rational_json(s.d(i, k)));
    dl.push_back(std::move(row));
  }
  j["dl"] = std::move(dl);
  return j;
}

Measure parse_measure(const Json& j, SpacePtr base) {
  const Json& wj = field(j, "weights");
  if (!wj.is_object()) fail("'weights' must be an object");
  std::vector<std::pair<int, Q>> raw;
  for (const auto& [label, val] : wj.items()) {
    const int idx = base->index_of(label);
    if (idx < 0) fail("unknown point '" + label + "'");
    raw.emplace_back(idx, parse_rational(val, base->mode));
  }
  return make_measure(std::move(base), std::move(raw));
}

Json measure_json(const Measure& m) {
  Json w = Json::object();
  for (const auto& [i, q] : m.weights) w[m.base->points[i]] = rational_json(q);
  Json j;
  j["weights"] = std::move(w);
  return j;
}

Tuple parse_tuple(const Json& j, const Space& base) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) fail("'points' must be a nonempty array");
  Tuple t;
  for (const Json& p : pts) {
    const int idx = base.index_of(p.get<std::string>());
    if (idx < 0) fail("unknown point '" + p.get<std::string>() + "'");
    t.push_back(idx);
  }
  return t;
}

PairTuple parse_pair_tuple(const Json& j, const Space& x, const Space& y) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) fail("'points' must be a nonempty array");
  PairTuple t;
  for (const Json& p : pts) {
    if (!p.is_array() || p.size() != 2) fail("pair tuple entries must be [x, y] pairs");
    const int a = x.index_of(p.at(0).get<std::string>());
    const int b = y.index_of(p.at(1).get<std::string>());
    if (a < 0 || b < 0) fail("unknown point in pair tuple");
    t.emplace_back(a, b);
  }
  return t;
}

ConeSpace parse_cone_space(const Json& j, const NumericMode& mode) {
  Cone cone;
  cone.dim = field(j, "dim").get<int>();
  if (cone.dim <= 0) fail("'dim' must be positive");
  for (const Json& row : field(j, "rows")) cone.rows.push_back(parse_vec(row, cone.dim, mode));
  std::vector<DomainConstraint> domain;
  if (j.contains("domain"))
    for (const Json& dc : j.at("domain"))
      domain.push_back({parse_vec(field(dc, "row"), cone.dim, mode),
                        parse_rational(field(dc, "rhs"), mode)});
  return make_cone_space(std::move(cone), std::move(domain), mode);
}

Vec parse_vec(const Json& j, int dim, const NumericMode& mode) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) fail("vector dimension mismatch");
  Vec v;
  v.reserve(dim);
  for (const Json& c : j) v.push_back(parse_rational(c, mode));
  return v;
}

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (const Q& c : v) j.push_back(rational_json(c));
  return j;
}

PointMeasure parse_point_measure(const Json& j, const ConeSpace& space) {
  std::vector<Vec> atoms;
  for (const Json& a : field(j, "atoms")) atoms.push_back(parse_vec(a, space.cone.dim, space.mode));
  std::vector<Q> weights;
  for (const Json& w : field(j, "weights")) weights.push_back(parse_rational(w, space.mode));
  return make_point_measure(space, std::move(atoms), std::move(weights));
}

VecFn MapTable::fn() const {
  return [table = *this](const Vec& x) -> Vec {
    for (const auto& [key, val] : table.entries)
      if (key == x) return val;
    std::string msg = "map table has no entry for (";
    for (std::size_t i = 0; i < x.size(); ++i) msg += (i ? "," : "") + q_str(x[i]);
    throw std::invalid_argument(msg + ")");
  };
}

MapTable parse_map_table(const Json& j, int in_dim, const NumericMode& mode) {
  MapTable t;
  for (const Json& e : field(j, "entries")) {
    Vec x = parse_vec(field(e, "x"), in_dim, mode);
    const Json& fx = field(e, "fx");
    if (!fx.is_array() || fx.empty()) fail("'fx' must be a nonempty array");
    if (t.out_dim == 0) t.out_dim = static_cast<int>(fx.size());
    Vec y = parse_vec(fx, t.out_dim, mode);
    t.entries.emplace_back(std::move(x), std::move(y));
  }
  if (t.entries.empty()) fail("map table is empty");
  return t;
}

}  // namespace ordot::io
