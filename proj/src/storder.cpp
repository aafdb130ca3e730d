#include "ordot/storder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ordot/lawvere.hpp"
#include "ordot/maxflow.hpp"

namespace ordot {

namespace {

void require_same_base(const Measure& p, const Measure& q) {
  if (p.base != q.base) throw std::invalid_argument("measures must share a base space");
}

std::vector<int> upward_closure(const Space& x, const std::vector<int>& gens) {
  std::vector<uint8_t> in(x.size(), 0);
  for (int g : gens)
    for (int z = 0; z < x.size(); ++z)
      if (x.le(g, z)) in[z] = 1;
  std::vector<int> out;
  for (int z = 0; z < x.size(); ++z)
    if (in[z]) out.push_back(z);
  return out;
}

Q measure_of_set(const Measure& p, const std::vector<int>& set) {
  Q sum = 0;
  for (const auto& [i, w] : p.weights)
    if (std::binary_search(set.begin(), set.end(), i)) sum += w;
  return sum;
}

}  // namespace

OrderWitness order_by_coupling(const Measure& p, const Measure& q) {
  require_same_base(p, q);
  const Space& x = *p.base;
  const int m = static_cast<int>(p.weights.size());
  const int n = static_cast<int>(q.weights.size());
  // nodes: 0 = source, 1..m supports of p, m+1..m+n supports of q, m+n+1 = sink
  MaxFlow mf(m + n + 2);
  const int s = 0, t = m + n + 1;
  for (int i = 0; i < m; ++i) mf.add_edge(s, 1 + i, p.weights[i].second);
  std::vector<std::vector<int>> mid(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (x.le(p.weights[i].first, q.weights[j].first))
        mid[i][j] = mf.add_edge(1 + i, 1 + m + j, q_min(p.weights[i].second, q.weights[j].second));
  for (int j = 0; j < n; ++j) mf.add_edge(1 + m + j, t, q.weights[j].second);

  const Q value = mf.run(s, t);
  OrderWitness w;
  w.method = OrderMethod::coupling;
  w.holds = x.mode.eq(value, Q(1));
  if (w.holds) {
    Coupling c;
    c.base = p.base;
    c.mass = Mat<Q>(m, n);
    for (int i = 0; i < m; ++i) c.rows.push_back(p.weights[i].first);
    for (int j = 0; j < n; ++j) c.cols.push_back(q.weights[j].first);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (mid[i][j] >= 0) c.mass(i, j) = mf.flow_on(mid[i][j]);
    w.coupling = std::move(c);
  } else {
    // Hall-type deficiency: sources on the cut's source side form a set A
    // with p(A) > q(up(A)); its upward closure is a violating upper set.
    const std::vector<uint8_t> side = mf.min_cut_source_side();
    std::vector<int> gens;
    for (int i = 0; i < m; ++i)
      if (side[1 + i]) gens.push_back(p.weights[i].first);
    w.upper_set = upward_closure(x, gens);
  }
  return w;
}

OrderWitness order_by_upper_sets(const Measure& p, const Measure& q, int oracle_bound) {
  require_same_base(p, q);
  const Space& x = *p.base;
  const int n = x.size();
  if (n > oracle_bound) throw std::domain_error("upper-set oracle bound exceeded");

  OrderWitness w;
  w.method = OrderMethod::upper_sets;
  w.holds = true;

  // Every upper set is the closure of its (unique) antichain of minimal
  // elements; enumerate antichains recursively.
  std::vector<int> antichain;
  std::vector<int> violating;
  auto check_current = [&]() {
    if (antichain.empty()) return true;
    const std::vector<int> c = upward_closure(x, antichain);
    if (!x.mode.leq(measure_of_set(p, c), measure_of_set(q, c))) {
      violating = c;
      return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int start) -> bool {
    if (!check_current()) return false;
    for (int i = start; i < n; ++i) {
      bool comparable = false;
      for (int a : antichain)
        if (x.le(a, i) || x.le(i, a)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      antichain.push_back(i);
      if (!self(self, i + 1)) return false;
      antichain.pop_back();
    }
    return true;
  };
  if (!rec(rec, 0)) {
    w.holds = false;
    w.upper_set = std::move(violating);
  }
  return w;
}

OrderWitness order_by_duality(const Measure& p, const Measure& q) {
  require_same_base(p, q);
  const Space& x = *p.base;
  const LOrderedReport lrep = is_l_ordered(x);
  if (!lrep.l_ordered)
    throw std::domain_error("base space is not L-ordered at the current tolerance");
  const LawvereSpace l = l_distance(x);

  TransportResult t =
      min_cost_coupling([&l](int a, int b) { return l.d(a, b); }, p, q);
  OrderWitness w;
  w.method = OrderMethod::duality;
  w.holds = x.mode.is_zero(t.value);
  if (w.holds) {
    w.coupling = std::move(t.plan);
  } else {
    // g = -f is short and monotone with sum g dp - sum g dq = value > 0
    GapWitness gw;
    gw.gap = t.value;
    gw.f.reserve(t.potential.f.size());
    for (const auto& [i, v] : t.potential.f) gw.f.emplace_back(i, Q(-v));
    w.gap = std::move(gw);
  }
  return w;
}

bool verify_witness(const OrderWitness& w, const Measure& p, const Measure& q) {
  const Space& x = *p.base;
  const NumericMode& mode = x.mode;
  if (w.holds) {
    if (!w.coupling) return w.method == OrderMethod::upper_sets;  // no evidence carried
    const Coupling& c = *w.coupling;
    const int m = c.mass.rows, n = c.mass.cols;
    for (int i = 0; i < m; ++i) {
      Q row = 0;
      for (int j = 0; j < n; ++j) {
        if (c.mass(i, j) < 0) return false;
        if (c.mass(i, j) > 0) {
          // support inside {<=}; duality evidence allows d_L ~ 0 at tolerance
          if (!x.le(c.rows[i], c.cols[j])) {
            if (mode.exact || w.method != OrderMethod::duality) return false;
            if (!mode.is_zero(l_distance(x).d(c.rows[i], c.cols[j]))) return false;
          }
        }
        row += c.mass(i, j);
      }
      if (row != p.at(c.rows[i])) return false;
    }
    for (int j = 0; j < n; ++j) {
      Q col = 0;
      for (int i = 0; i < m; ++i) col += c.mass(i, j);
      if (col != q.at(c.cols[j])) return false;
    }
    return true;
  }
  if (w.upper_set) {
    const std::vector<int>& c = *w.upper_set;
    for (int z : c)
      for (int up = 0; up < x.size(); ++up)
        if (x.le(z, up) && !std::binary_search(c.begin(), c.end(), up)) return false;
    return !mode.leq(measure_of_set(p, c), measure_of_set(q, c));
  }
  if (w.gap) {
    const GapWitness& g = *w.gap;
    auto value_of = [&g](int pt) -> const Q* {
      for (const auto& [i, v] : g.f)
        if (i == pt) return &v;
      return nullptr;
    };
    for (const auto& [a, fa] : g.f)
      for (const auto& [b, fb] : g.f) {
        if (fa - fb > x.d(a, b)) return false;            // short
        if (x.le(a, b) && fa > fb) return false;          // monotone
      }
    Q gap = 0;
    for (const auto& [i, w_p] : p.weights) {
      const Q* v = value_of(i);
      if (!v) return false;
      gap += *v * w_p;
    }
    for (const auto& [i, w_q] : q.weights) {
      const Q* v = value_of(i);
      if (!v) return false;
      gap -= *v * w_q;
    }
    return gap == g.gap && gap > 0;
  }
  return false;
}

namespace {

// Position-level coupling: spreads the support coupling uniformly over tuple
// positions carrying the same point. Row sums 1/N, column sums 1/M; entries
// positive only on componentwise-ordered position pairs.
Mat<Q> position_coupling(const Coupling& c, const Tuple& xs, const Tuple& ys) {
  const int n = static_cast<int>(xs.size()), m = static_cast<int>(ys.size());
  std::map<int, int> row_of, col_of;
  for (std::size_t k = 0; k < c.rows.size(); ++k) row_of[c.rows[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < c.cols.size(); ++k) col_of[c.cols[k]] = static_cast<int>(k);
  std::map<int, long> cx, cy;
  for (int p : xs) ++cx[p];
  for (int p : ys) ++cy[p];
  Mat<Q> s(n, m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      const Q& mass = c.mass(row_of.at(xs[a]), col_of.at(ys[b]));
      if (mass != 0) s(a, b) = mass / Q(cx[xs[a]] * cy[ys[b]]);
    }
  return s;
}

}  // namespace

std::variant<SplitResult, OrderWitness> split(const SpacePtr& x, const Tuple& xs,
                                              const Tuple& ys) {
  const Measure p = empirical(x, xs), q = empirical(x, ys);
  OrderWitness w = order_by_coupling(p, q);
  if (!w.holds) return w;

  const Mat<Q> s = position_coupling(*w.coupling, xs, ys);
  const mpz_class l = denominator_lcm(s.data.begin(), s.data.end());
  if (!l.fits_slong_p() || l.get_si() > 10000000)
    throw std::domain_error("split refinement size exceeds bound");
  const long size = l.get_si();
  SplitResult res;
  res.phi.source_size = res.psi.source_size = static_cast<int>(size);
  res.phi.target_size = static_cast<int>(xs.size());
  res.psi.target_size = static_cast<int>(ys.size());
  for (int a = 0; a < s.rows; ++a)
    for (int b = 0; b < s.cols; ++b) {
      if (s(a, b) == 0) continue;
      const Q count = s(a, b) * Q(l);
      if (count.get_den() != 1) throw internal_check_error("non-integral fiber count");
      for (long k = 0; k < count.get_num().get_si(); ++k) {
        res.phi.assignment.push_back(a);
        res.psi.assignment.push_back(b);
      }
    }
  if (!validate(res.phi).ok() || !validate(res.psi).ok())
    throw internal_check_error("split maps are not uniform-fiber");
  return res;
}

namespace {

// Hopcroft-Karp maximum matching on a bipartite adjacency structure.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right_size) {
  const int n = static_cast<int>(adj.size());
  constexpr int kInf = 1 << 29;
  std::vector<int> match_l(n, -1), match_r(right_size, -1), dist(n);
  auto bfs = [&]() {
    std::vector<int> queue;
    for (int u = 0; u < n; ++u) {
      dist[u] = match_l[u] < 0 ? 0 : kInf;
      if (match_l[u] < 0) queue.push_back(u);
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : adj[u]) {
        const int w = match_r[v];
        if (w < 0)
          found = true;
        else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      const int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  for (;;) {
    if (!bfs()) break;
    bool any = false;
    for (int u = 0; u < n; ++u)
      if (match_l[u] < 0 && dfs(dfs, u)) any = true;
    if (!any) break;
  }
  return match_l;
}

}  // namespace

std::variant<std::vector<int>, OrderWitness> permutation_split(const SpacePtr& x, const Tuple& xs,
                                                               const Tuple& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("tuples must have equal length");
  const Measure p = empirical(x, xs), q = empirical(x, ys);
  OrderWitness w = order_by_coupling(p, q);
  if (!w.holds) return w;

  const Mat<Q> s = position_coupling(*w.coupling, xs, ys);
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s(a, b) != 0) adj[a].push_back(b);
  std::vector<int> sigma = hopcroft_karp(adj, n);
  for (int a = 0; a < n; ++a)
    if (sigma[a] < 0)
      throw internal_check_error("bistochastic support admits no perfect matching");
  for (int a = 0; a < n; ++a)
    if (!x->le(xs[a], ys[sigma[a]]))
      throw internal_check_error("matching left the order graph");
  return sigma;
}

std::variant<DensityResult, OrderWitness> order_density_approx(const Measure& p, const Measure& q,
                                                               const Q& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  OrderWitness w = order_by_coupling(p, q);
  if (!w.holds) return w;
  const Coupling& c = *w.coupling;
  const Space& x = *p.base;

  std::vector<std::pair<std::pair<int, int>, Q>> cells;  // ((x point, y point), mass)
  for (int i = 0; i < c.mass.rows; ++i)
    for (int j = 0; j < c.mass.cols; ++j)
      if (c.mass(i, j) != 0) cells.push_back({{c.rows[i], c.cols[j]}, c.mass(i, j)});
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<long> counts(cells.size(), 0);
  long total = 0;
  if (x.mode.exact) {
    // least common denominator represents both measures exactly
    std::vector<Q> masses;
    for (const auto& cell : cells) masses.push_back(cell.second);
    const mpz_class l = denominator_lcm(masses.begin(), masses.end());
    if (!l.fits_slong_p() || l.get_si() > 10000000)
      throw std::domain_error("exact representation size exceeds bound");
    total = l.get_si();
    for (std::size_t k = 0; k < cells.size(); ++k)
      counts[k] = Q(cells[k].second * Q(l)).get_num().get_si();
  } else {
    // least N with (#support pairs) * diam / N < eps, then largest remainder
    Q diam = 0;
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < x.size(); ++b) diam = q_max(diam, x.d(a, b));
    const Q bound = Q(static_cast<long>(cells.size())) * diam / eps;
    total = 1;
    if (bound >= 1) {
      mpz_class f = bound.get_num() / bound.get_den();
      total = f.get_si() + 1;
    }
    std::vector<Q> rem(cells.size());
    long placed = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const Q scaled = cells[k].second * Q(total);
      mpz_class fl = scaled.get_num() / scaled.get_den();
      counts[k] = fl.get_si();
      placed += counts[k];
      rem[k] = scaled - Q(fl);
    }
    std::vector<std::size_t> order(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&rem](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
    for (std::size_t k = 0; placed < total; ++k) ++counts[order[k]], ++placed;
  }

  DensityResult res;
  res.xs.reserve(total);
  res.ys.reserve(total);
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (long c2 = 0; c2 < counts[k]; ++c2) {
      res.xs.push_back(cells[k].first.first);
      res.ys.push_back(cells[k].first.second);
    }
  return res;
}

LiftResult marginal_lift(const Space& x, const Space& y, const PairTuple& r, const Tuple& pbar,
                         const Tuple& qbar) {
  if (r.size() != pbar.size() || r.size() != qbar.size() || r.empty())
    throw std::invalid_argument("length mismatch");
  Tuple rx, ry;
  for (const auto& [a, b] : r) {
    rx.push_back(a);
    ry.push_back(b);
  }
  const Assignment ax = assignment_distance(x, rx, pbar);
  const Assignment ay = assignment_distance(y, ry, qbar);
  LiftResult res;
  res.sigma_x = ax.perm;
  res.sigma_y = ay.perm;
  res.dist = ax.value + ay.value;
  res.lifted.reserve(r.size());
  for (std::size_t n = 0; n < r.size(); ++n)
    res.lifted.emplace_back(pbar[ax.perm[n]], qbar[ay.perm[n]]);
  return res;
}

AntisymmetryVerdict check_antisymmetry(const Measure& p, const Measure& q) {
  AntisymmetryVerdict v;
  OrderWitness fwd = order_by_duality(p, q);
  OrderWitness bwd = order_by_duality(q, p);
  v.p_le_q = fwd.holds;
  v.q_le_p = bwd.holds;
  if (fwd.holds && bwd.holds) {
    v.equal = p.weights == q.weights;
    if (!v.equal && p.base->mode.exact)
      throw internal_check_error("stochastic order antisymmetry violated");
  } else if (fwd.holds && !bwd.holds) {
    v.strict = bwd.gap;  // sum f dq > sum f dp
  } else if (!fwd.holds && bwd.holds) {
    v.strict = fwd.gap;  // sum f dp > sum f dq
  }
  return v;
}

MeasureSpace measure_space(const std::vector<Measure>& ms) {
  if (ms.empty()) throw std::invalid_argument("need at least one measure");
  for (const auto& m : ms)
    if (m.base != ms[0].base) throw std::invalid_argument("measures must share a base space");
  MeasureSpace out;
  std::vector<const Measure*> distinct;
  for (const auto& m : ms) {
    int found = -1;
    for (std::size_t k = 0; k < distinct.size(); ++k)
      if (distinct[k]->weights == m.weights) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(distinct.size());
      distinct.push_back(&m);
    }
    out.index.push_back(found);
  }
  const int n = static_cast<int>(distinct.size());
  std::vector<std::string> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = "m" + std::to_string(i);
  Mat<Q> dist(n, n);
  Mat<uint8_t> leq(n, n, 0);
  for (int i = 0; i < n; ++i) {
    leq(i, i) = 1;
    for (int j = i + 1; j < n; ++j) {
      dist(i, j) = dist(j, i) = wasserstein(*distinct[i], *distinct[j]).value;
      leq(i, j) = order_by_coupling(*distinct[i], *distinct[j]).holds;
      leq(j, i) = order_by_coupling(*distinct[j], *distinct[i]).holds;
    }
  }
  out.space = make_space(std::move(pts), std::move(dist), std::move(leq), ms[0].base->mode);
  return out;
}

Measure outer_measure(const NestedMeasure& mu, const MeasureSpace& ps, int offset) {
  std::vector<std::pair<int, Q>> raw;
  for (std::size_t k = 0; k < mu.inner.size(); ++k)
    raw.emplace_back(ps.index.at(offset + k), mu.outer[k]);
  return make_measure(ps.space, std::move(raw));
}

}  // namespace ordot
