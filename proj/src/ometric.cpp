#include "ordot/ometric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordot {

int Space::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == label) return i;
  return -1;
}

SpacePtr make_space(std::vector<std::string> points, Mat<Q> dist, Mat<uint8_t> leq,
                    NumericMode mode) {
  const int n = static_cast<int>(points.size());
  if (dist.rows != n || dist.cols != n || leq.rows != n || leq.cols != n)
    throw std::invalid_argument("space matrices must be n x n");
  auto s = std::make_shared<Space>();
  s->points = std::move(points);
  s->dist = std::move(dist);
  s->leq = std::move(leq);
  s->mode = mode;
  return s;
}

ValidationReport validate(const Space& x) {
  ValidationReport rep;
  const int n = x.size();
  const NumericMode& m = x.mode;
  auto flag = [&rep](const char* axiom, std::vector<int> where) {
    rep.violations.push_back({axiom, std::move(where)});
  };

  for (int i = 0; i < n; ++i)
    if (x.d(i, i) != 0) flag("zero_diagonal", {i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!m.eq(x.d(i, j), x.d(j, i))) flag("symmetry", {i, j});
      // positivity is structural: distinct points must not coincide
      if (x.d(i, j) <= 0 || x.d(j, i) <= 0) flag("positivity", {i, j});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!m.leq(x.d(i, k), x.d(i, j) + x.d(j, k))) flag("triangle", {i, j, k});

  for (int i = 0; i < n; ++i)
    if (!x.le(i, i)) flag("reflexivity", {i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.le(i, j) && x.le(j, i)) flag("antisymmetry", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (x.le(i, j) && x.le(j, k) && !x.le(i, k)) flag("transitivity", {i, j, k});

  return rep;
}

SpacePtr tensor(const Space& x, const Space& y) {
  const int nx = x.size(), ny = y.size();
  const int n = nx * ny;
  std::vector<std::string> pts;
  pts.reserve(n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) pts.push_back("(" + x.points[i] + "," + y.points[j] + ")");
  Mat<Q> dist(n, n);
  Mat<uint8_t> leq(n, n, 0);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const int a = i * ny + j;
      for (int k = 0; k < nx; ++k)
        for (int l = 0; l < ny; ++l) {
          const int b = k * ny + l;
          dist(a, b) = x.d(i, k) + y.d(j, l);
          leq(a, b) = x.le(i, k) && y.le(j, l);
        }
    }
  return make_space(std::move(pts), std::move(dist), std::move(leq), x.mode);
}

int tensor_index(const Space& /*x*/, const Space& y, int i, int j) { return i * y.size() + j; }

namespace {

std::string tuple_label(const Space& x, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += x.points[t[i]];
  }
  return s + ")";
}

}  // namespace

SpacePtr power(const Space& x, int n, long long materialize_bound) {
  if (n < 1) throw std::invalid_argument("power exponent must be >= 1");
  const int base = x.size();
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= base;
    if (count > materialize_bound)
      throw std::domain_error("power space exceeds materialization bound; use tuple operations");
  }
  // enumerate tuples in lexicographic order
  std::vector<Tuple> tuples;
  tuples.reserve(static_cast<std::size_t>(count));
  Tuple cur(n, 0);
  for (;;) {
    tuples.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == base - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  const int total = static_cast<int>(tuples.size());
  std::vector<std::string> pts;
  pts.reserve(total);
  for (const Tuple& t : tuples) pts.push_back(tuple_label(x, t));
  Mat<Q> dist(total, total);
  Mat<uint8_t> leq(total, total, 0);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      dist(a, b) = tuple_distance(x, tuples[a], tuples[b]);
      leq(a, b) = tuple_leq(x, tuples[a], tuples[b]);
    }
  return make_space(std::move(pts), std::move(dist), std::move(leq), x.mode);
}

Q tuple_distance(const Space& x, const Tuple& s, const Tuple& t) {
  if (s.size() != t.size()) throw std::invalid_argument("tuple length mismatch");
  if (s.empty()) throw std::invalid_argument("empty tuple");
  Q sum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) sum += x.d(s[i], t[i]);
  return sum / Q(static_cast<long>(s.size()));
}

bool tuple_leq(const Space& x, const Tuple& s, const Tuple& t) {
  if (s.size() != t.size()) throw std::invalid_argument("tuple length mismatch");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!x.le(s[i], t[i])) return false;
  return true;
}

ValidationReport validate(const UniformFiberMap& phi) {
  ValidationReport rep;
  if (phi.source_size <= 0 || phi.target_size <= 0 ||
      static_cast<int>(phi.assignment.size()) != phi.source_size) {
    rep.violations.push_back({"shape", {}});
    return rep;
  }
  if (phi.source_size % phi.target_size != 0) {
    rep.violations.push_back({"divisibility", {phi.source_size, phi.target_size}});
    return rep;
  }
  std::vector<int> fiber(phi.target_size, 0);
  for (int m = 0; m < phi.source_size; ++m) {
    const int v = phi.assignment[m];
    if (v < 0 || v >= phi.target_size) {
      rep.violations.push_back({"range", {m, v}});
      return rep;
    }
    ++fiber[v];
  }
  const int expect = phi.source_size / phi.target_size;
  for (int n = 0; n < phi.target_size; ++n)
    if (fiber[n] != expect) rep.violations.push_back({"fiber_cardinality", {n, fiber[n]}});
  return rep;
}

Tuple power_embedding(const UniformFiberMap& phi, const Tuple& t) {
  if (!validate(phi).ok()) throw std::invalid_argument("not a uniform-fiber map");
  if (static_cast<int>(t.size()) != phi.target_size)
    throw std::invalid_argument("tuple length does not match the map's codomain");
  Tuple out(phi.source_size);
  for (int m = 0; m < phi.source_size; ++m) out[m] = t[phi.assignment[m]];
  return out;
}

}  // namespace ordot
