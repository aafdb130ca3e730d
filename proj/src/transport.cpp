#include "ordot/transport.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ordot {

Q Coupling::total_cost(const std::function<Q(int, int)>& cost) const {
  Q sum = 0;
  for (int i = 0; i < mass.rows; ++i)
    for (int j = 0; j < mass.cols; ++j)
      if (mass(i, j) != 0) sum += cost(rows[i], cols[j]) * mass(i, j);
  return sum;
}

Q Potential::at(int point) const {
  for (const auto& [i, v] : f)
    if (i == point) return v;
  throw std::invalid_argument("potential not defined at this point");
}

namespace {

// Primal transportation simplex over a dense m x n cost matrix with positive
// supplies/demands of equal total. Bland's rule: entering cell is the lowest
// (i*n + j) with negative reduced cost, the leaving cell breaks minimum-ratio
// ties by lowest index. Returns the basic optimal flow and tree potentials
// (u, v) with v_j - u_i <= c_ij everywhere, tight on basic cells.
struct TransportSimplex {
  int m, n;
  const Mat<Q>& cost;
  Mat<Q> flow;
  std::vector<uint8_t> basic;
  std::vector<Q> u, v;

  TransportSimplex(const std::vector<Q>& supply, const std::vector<Q>& demand, const Mat<Q>& c)
      : m(static_cast<int>(supply.size())),
        n(static_cast<int>(demand.size())),
        cost(c),
        flow(m, n),
        basic(static_cast<std::size_t>(m) * n, 0),
        u(m),
        v(n) {
    northwest_corner(supply, demand);
    for (;;) {
      compute_potentials();
      const int enter = entering_cell();
      if (enter < 0) break;
      pivot(enter);
    }
  }

  void northwest_corner(std::vector<Q> rs, std::vector<Q> rd) {
    int i = 0, j = 0;
    for (;;) {
      basic[static_cast<std::size_t>(i) * n + j] = 1;
      const Q t = q_min(rs[i], rd[j]);
      flow(i, j) = t;
      rs[i] -= t;
      rd[j] -= t;
      if (i == m - 1 && j == n - 1) break;
      if (rs[i] == 0 && i < m - 1)
        ++i;
      else
        ++j;
    }
  }

  void compute_potentials() {
    // BFS over the basis tree; u[0] anchors the system.
    std::vector<uint8_t> su(m, 0), sv(n, 0);
    u[0] = 0;
    su[0] = 1;
    std::vector<int> queue{0};  // sources as k, sinks as m + k
    while (!queue.empty()) {
      const int node = queue.back();
      queue.pop_back();
      if (node < m) {
        for (int j = 0; j < n; ++j)
          if (basic[static_cast<std::size_t>(node) * n + j] && !sv[j]) {
            v[j] = u[node] + cost(node, j);
            sv[j] = 1;
            queue.push_back(m + j);
          }
      } else {
        const int j = node - m;
        for (int i = 0; i < m; ++i)
          if (basic[static_cast<std::size_t>(i) * n + j] && !su[i]) {
            u[i] = v[j] - cost(i, j);
            su[i] = 1;
            queue.push_back(i);
          }
      }
    }
    for (int i = 0; i < m; ++i)
      if (!su[i]) throw internal_check_error("basis is not a spanning tree");
    for (int j = 0; j < n; ++j)
      if (!sv[j]) throw internal_check_error("basis is not a spanning tree");
  }

  int entering_cell() const {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (basic[static_cast<std::size_t>(i) * n + j]) continue;
        if (cost(i, j) + u[i] - v[j] < 0) return i * n + j;
      }
    return -1;
  }

  void pivot(int enter) {
    const int ei = enter / n, ej = enter % n;
    // Unique tree path from sink ej back to source ei; cells along it get
    // alternating signs starting with -.
    std::vector<int> parent(m + n, -2);
    std::vector<int> queue{m + ej};
    parent[m + ej] = -1;
    while (!queue.empty() && parent[ei] == -2) {
      const int node = queue.back();
      queue.pop_back();
      if (node < m) {
        for (int j = 0; j < n; ++j)
          if (basic[static_cast<std::size_t>(node) * n + j] && parent[m + j] == -2) {
            parent[m + j] = node;
            queue.push_back(m + j);
          }
      } else {
        const int j = node - m;
        for (int i = 0; i < m; ++i)
          if (basic[static_cast<std::size_t>(i) * n + j] && parent[i] == -2) {
            parent[i] = m + j;
            queue.push_back(i);
          }
      }
    }
    if (parent[ei] == -2) throw internal_check_error("entering cell closes no cycle");
    // Walk ei -> ej through the tree, collecting the minus cells (source->sink
    // steps seen from the walk are the cells losing flow).
    std::vector<std::pair<int, int>> minus, plus;
    int node = ei;
    bool minus_step = true;
    while (parent[node] != -1) {
      const int next = parent[node];
      const int i = node < m ? node : next;
      const int j = node < m ? next - m : node - m;
      (minus_step ? minus : plus).emplace_back(i, j);
      minus_step = !minus_step;
      node = next;
    }
    // theta = min flow on minus cells; leaving cell by lowest index on ties
    std::optional<Q> theta;
    int leave_i = -1, leave_j = -1;
    for (const auto& [i, j] : minus) {
      const Q& fl = flow(i, j);
      if (!theta || fl < *theta ||
          (fl == *theta && i * n + j < leave_i * n + leave_j)) {
        theta = fl;
        leave_i = i;
        leave_j = j;
      }
    }
    for (const auto& [i, j] : minus) flow(i, j) -= *theta;
    for (const auto& [i, j] : plus) flow(i, j) += *theta;
    flow(ei, ej) += *theta;
    basic[static_cast<std::size_t>(leave_i) * n + leave_j] = 0;
    basic[static_cast<std::size_t>(ei) * n + ej] = 1;
  }
};

struct Supports {
  std::vector<int> pts;
  std::vector<Q> w;
};

Supports support_of(const Measure& p) {
  Supports s;
  for (const auto& [i, w] : p.weights) {
    s.pts.push_back(i);
    s.w.push_back(w);
  }
  return s;
}

}  // namespace

TransportResult min_cost_coupling(const CostFn& cost, const Measure& p, const Measure& q) {
  if (p.base != q.base) throw std::invalid_argument("measures must share a base space");
  const Supports sp = support_of(p), sq = support_of(q);
  const int m = static_cast<int>(sp.pts.size()), n = static_cast<int>(sq.pts.size());

  Mat<Q> c(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      c(i, j) = cost(sp.pts[i], sq.pts[j]);
      if (c(i, j) < 0) throw std::invalid_argument("cost must be nonnegative");
    }

  TransportSimplex simplex(sp.w, sq.w, c);

  TransportResult res;
  res.plan.base = p.base;
  res.plan.rows = sp.pts;
  res.plan.cols = sq.pts;
  res.plan.mass = simplex.flow;
  res.value = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (simplex.flow(i, j) != 0) res.value += c(i, j) * simplex.flow(i, j);

  // certification: marginals, dual feasibility, slackness, strong duality
  for (int i = 0; i < m; ++i) {
    Q row = 0;
    for (int j = 0; j < n; ++j) {
      if (simplex.flow(i, j) < 0) throw internal_check_error("negative flow");
      row += simplex.flow(i, j);
    }
    if (row != sp.w[i]) throw internal_check_error("row marginal mismatch");
  }
  for (int j = 0; j < n; ++j) {
    Q col = 0;
    for (int i = 0; i < m; ++i) col += simplex.flow(i, j);
    if (col != sq.w[j]) throw internal_check_error("column marginal mismatch");
  }
  Q dual = 0;
  for (int j = 0; j < n; ++j) dual += simplex.v[j] * sq.w[j];
  for (int i = 0; i < m; ++i) dual -= simplex.u[i] * sp.w[i];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const Q rc = c(i, j) + simplex.u[i] - simplex.v[j];
      if (rc < 0) throw internal_check_error("dual infeasible at optimum");
      if (simplex.flow(i, j) > 0 && rc != 0) throw internal_check_error("slackness violated");
    }
  if (dual != res.value) throw internal_check_error("duality gap is not zero");

  // Merge (u, v) into a single short potential on the union of supports:
  // f(z) = min_i (u_i + c(x_i, z)). Requires the cost contract (zero
  // diagonal + triangle inequality); verified below.
  std::vector<int> scope = sp.pts;
  scope.insert(scope.end(), sq.pts.begin(), sq.pts.end());
  std::sort(scope.begin(), scope.end());
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
  std::vector<Q> fval;
  fval.reserve(scope.size());
  for (int z : scope) {
    Q best = simplex.u[0] + cost(sp.pts[0], z);
    for (int i = 1; i < m; ++i) best = q_min(best, simplex.u[i] + cost(sp.pts[i], z));
    fval.push_back(best);
  }
  // anchor at the lexicographically first support point of p
  int anchor = sp.pts[0];
  for (int i = 1; i < m; ++i)
    if (p.base->points[sp.pts[i]] < p.base->points[anchor]) anchor = sp.pts[i];
  Q shift;
  for (std::size_t k = 0; k < scope.size(); ++k)
    if (scope[k] == anchor) shift = fval[k];
  for (Q& val : fval) val -= shift;
  for (std::size_t a = 0; a < scope.size(); ++a)
    for (std::size_t b = 0; b < scope.size(); ++b)
      if (fval[b] - fval[a] > cost(scope[a], scope[b]))
        throw std::invalid_argument(
            "cost violates the zero-diagonal/triangle contract on the supports");
  Q gap = 0;
  for (std::size_t k = 0; k < scope.size(); ++k)
    gap += fval[k] * (q.at(scope[k]) - p.at(scope[k]));
  if (gap != res.value) throw internal_check_error("merged potential does not certify the value");
  res.potential.f.reserve(scope.size());
  for (std::size_t k = 0; k < scope.size(); ++k) res.potential.f.emplace_back(scope[k], fval[k]);
  return res;
}

TransportResult wasserstein(const Measure& p, const Measure& q) {
  const Space& x = *p.base;
  return min_cost_coupling([&x](int a, int b) { return x.d(a, b); }, p, q);
}

namespace {

// O(N^3) Hungarian method with exact potentials.
std::vector<int> hungarian(const Mat<Q>& c) {
  const int n = c.rows;
  std::vector<Q> u(n + 1, Q(0)), v(n + 1, Q(0));
  std::vector<int> match(n + 1, 0), way(n + 1, 0);  // 1-based; match[j] = row in column j
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<std::optional<Q>> minv(n + 1);
    std::vector<uint8_t> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      std::optional<Q> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Q cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> perm(n);
  for (int j = 1; j <= n; ++j) perm[match[j] - 1] = j - 1;
  return perm;
}

}  // namespace

Assignment assignment_distance(const Space& x, const Tuple& xs, const Tuple& ys,
                               int hungarian_limit) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("tuples must be nonempty and of equal length");
  const int n = static_cast<int>(xs.size());
  Mat<Q> c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = x.d(xs[i], ys[j]);

  Assignment res;
  if (n <= hungarian_limit) {
    res.perm = hungarian(c);
  } else {
    // unit-supply transportation problem; its basic optimum is a permutation
    const std::vector<Q> unit(n, Q(1, static_cast<unsigned long>(n)));
    TransportSimplex simplex(unit, unit, c);
    res.perm.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (simplex.flow(i, j) == unit[0]) res.perm[i] = j;
    for (int i = 0; i < n; ++i)
      if (res.perm[i] < 0) throw internal_check_error("basic optimum is not a permutation");
  }
  Q total = 0;
  for (int i = 0; i < n; ++i) total += c(i, res.perm[i]);
  res.value = total / Q(n);
  return res;
}

}  // namespace ordot
