#include "ordot/lawvere.hpp"

#include <numeric>
#include <stdexcept>

#include "ordot/lp.hpp"

namespace ordot {

ValidationReport validate(const LawvereSpace& x) {
  ValidationReport rep;
  const int n = x.size();
  const NumericMode& m = x.mode;
  if (x.dl.rows != n || x.dl.cols != n) {
    rep.violations.push_back({"shape", {}});
    return rep;
  }
  for (int i = 0; i < n; ++i)
    if (x.d(i, i) != 0) rep.violations.push_back({"zero_diagonal", {i}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.d(i, j) < 0) rep.violations.push_back({"nonnegativity", {i, j}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!m.leq(x.d(i, k), x.d(i, j) + x.d(j, k)))
          rep.violations.push_back({"triangle", {i, j, k}});
  return rep;
}

LawvereSpace l_distance(const Space& x) {
  const int n = x.size();
  LawvereSpace out;
  out.points = x.points;
  out.mode = x.mode;
  out.dl = Mat<Q>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.dl(i, j) = x.le(i, j) ? Q(0) : x.d(i, j);
  // Floyd-Warshall closure over the mixed edge set
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q via = out.dl(i, k) + out.dl(k, j);
        if (via < out.dl(i, j)) out.dl(i, j) = via;
      }
  return out;
}

namespace {

// Shared constraint system: f(u) - f(v) <= d(u,v) for all u != v, and
// f(u) - f(v) <= 0 for u <= v. Variables are free.
lp::Problem potential_problem(const Space& x) {
  const int n = x.size();
  lp::Problem prob;
  for (int i = 0; i < n; ++i) prob.add_var(Q(0), /*is_free=*/true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::vector<Q> row(n, Q(0));
      row[u] = 1;
      row[v] = -1;
      prob.add_row(row, lp::Rel::le, x.d(u, v));
      if (x.le(u, v)) {
        std::vector<Q> orow(n, Q(0));
        orow[u] = 1;
        orow[v] = -1;
        prob.add_row(std::move(orow), lp::Rel::le, Q(0));
      }
    }
  return prob;
}

}  // namespace

DlWitness dl_via_potentials(const Space& x, int from, int to) {
  const int n = x.size();
  if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("point out of range");
  if (from == to) return {Q(0), std::vector<Q>(n, Q(0))};
  lp::Problem prob = potential_problem(x);
  prob.maximize = true;
  prob.objective[from] = 1;
  prob.objective[to] = -1;
  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal)
    throw internal_check_error("potential LP must be feasible and bounded");
  DlWitness w;
  w.value = sol.objective;
  w.f = std::move(sol.x);
  const Q shift = w.f[to];
  for (Q& v : w.f) v -= shift;
  return w;
}

std::vector<Q> dl_column_via_potentials(const Space& x, int anchor) {
  const int n = x.size();
  if (anchor < 0 || anchor >= n) throw std::invalid_argument("point out of range");
  lp::Problem prob = potential_problem(x);
  prob.maximize = true;
  for (int i = 0; i < n; ++i) prob.objective[i] = 1;
  std::vector<Q> fix(n, Q(0));
  fix[anchor] = 1;
  prob.add_row(std::move(fix), lp::Rel::eq, Q(0));
  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal)
    throw internal_check_error("potential LP must be feasible and bounded");
  return sol.x;
}

LOrderedReport is_l_ordered(const Space& x) {
  LawvereSpace l = l_distance(x);
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.mode.is_zero(l.d(i, j)) && !x.le(i, j)) return {false, std::make_pair(i, j)};
  return {true, std::nullopt};
}

SymmetrizeResult symmetrize(const LawvereSpace& x) {
  const int n = x.size();
  const NumericMode& m = x.mode;
  // union-find over the mutual-zero relation
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.is_zero(x.d(i, j)) && m.is_zero(x.d(j, i))) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<int> cls(n, -1), rep;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    cls[i] = cls[r];
  }
  const int k = static_cast<int>(rep.size());
  std::vector<std::string> pts(k);
  Mat<Q> dist(k, k);
  Mat<uint8_t> leq(k, k, 0);
  for (int a = 0; a < k; ++a) {
    pts[a] = x.points[rep[a]];
    for (int b = 0; b < k; ++b) {
      dist(a, b) = q_max(x.d(rep[a], rep[b]), x.d(rep[b], rep[a]));
      leq(a, b) = m.is_zero(x.d(rep[a], rep[b])) ? 1 : 0;
    }
  }
  return {make_space(std::move(pts), std::move(dist), std::move(leq), m), std::move(cls)};
}

bool check_lawvere_morphism(const std::vector<int>& f, const LawvereSpace& x,
                            const LawvereSpace& y) {
  if (static_cast<int>(f.size()) != x.size()) throw std::invalid_argument("map not total");
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (!x.mode.leq(y.d(f[i], f[j]), x.d(i, j))) return false;
  return true;
}

bool yoneda_check(const LawvereSpace& x, int from, int to) {
  Q best = x.d(from, 0) - x.d(to, 0);
  for (int z = 1; z < x.size(); ++z) best = q_max(best, x.d(from, z) - x.d(to, z));
  return x.mode.eq(best, x.d(from, to));
}

}  // namespace ordot
