#include "ordot/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ordot/lawvere.hpp"
#include "ordot/lp.hpp"

namespace ordot {

namespace {

void require_dim(const Cone& cone, const Vec& v) {
  if (static_cast<int>(v.size()) != cone.dim) throw std::invalid_argument("vector dimension mismatch");
}

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

ConeSpace make_cone_space(Cone cone, std::vector<DomainConstraint> domain, NumericMode mode) {
  for (const Vec& row : cone.rows) require_dim(cone, row);
  for (const DomainConstraint& dc : domain)
    if (static_cast<int>(dc.row.size()) != cone.dim)
      throw std::invalid_argument("domain row dimension mismatch");
  if (!cone_pointed(cone))
    throw std::invalid_argument("cone is not pointed: the induced order would not be antisymmetric");
  return {std::move(cone), std::move(domain), mode};
}

bool cone_contains(const Cone& cone, const Vec& v) {
  require_dim(cone, v);
  for (const Vec& row : cone.rows)
    if (dot(row, v) < 0) return false;
  return true;
}

bool cone_pointed(const Cone& cone) {
  // cone intersect -cone = kernel of the row matrix; pointed iff rank == dim
  const int m = static_cast<int>(cone.rows.size());
  const int n = cone.dim;
  if (n == 0) return true;
  std::vector<Vec> a = cone.rows;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const Q lead = a[rank][col];
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Q f = a[r][col] / lead;
      for (int k = col; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank == n;
}

bool cone_leq(const ConeSpace& space, const Vec& x, const Vec& y) {
  return cone_contains(space.cone, sub(y, x));
}

bool in_domain(const ConeSpace& space, const Vec& x) {
  for (const DomainConstraint& dc : space.domain)
    if (dot(dc.row, x) < dc.rhs) return false;
  return true;
}

std::optional<Vec> separate(const Cone& cone, const Vec& v) {
  require_dim(cone, v);
  if (cone.rows.empty()) return std::nullopt;  // the whole space
  const int m = static_cast<int>(cone.rows.size());
  lp::Problem prob;
  for (int j = 0; j < m; ++j) prob.add_var(dot(cone.rows[j], v));
  prob.add_row(std::vector<Q>(m, Q(1)), lp::Rel::eq, Q(1));
  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal) throw internal_check_error("separation LP must solve");
  if (sol.objective >= 0) return std::nullopt;
  Vec h(cone.dim, Q(0));
  for (int j = 0; j < m; ++j)
    if (sol.x[j] != 0)
      for (int i = 0; i < cone.dim; ++i) h[i] += sol.x[j] * cone.rows[j][i];
  Q norm = 0;
  for (const Q& c : h) norm = q_max(norm, q_abs(c));
  for (Q& c : h) c /= norm;
  return h;
}

PointMeasure make_point_measure(const ConeSpace& space, std::vector<Vec> atoms,
                                std::vector<Q> weights) {
  if (atoms.size() != weights.size() || atoms.empty())
    throw std::invalid_argument("atoms/weights shape mismatch");
  PointMeasure out;
  Q sum = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    require_dim(space.cone, atoms[k]);
    if (weights[k] < 0) throw std::invalid_argument("negative weight");
    if (weights[k] == 0) continue;
    if (!in_domain(space, atoms[k])) throw std::invalid_argument("atom outside the domain");
    sum += weights[k];
    int found = -1;
    for (std::size_t j = 0; j < out.atoms.size(); ++j)
      if (out.atoms[j] == atoms[k]) {
        found = static_cast<int>(j);
        break;
      }
    if (found >= 0)
      out.weights[found] += weights[k];
    else {
      out.atoms.push_back(std::move(atoms[k]));
      out.weights.push_back(weights[k]);
    }
  }
  if (sum != 1) throw std::invalid_argument("weights must sum to 1");
  return out;
}

Vec barycenter(const PointMeasure& p) {
  Vec e(p.atoms[0].size(), Q(0));
  for (std::size_t k = 0; k < p.atoms.size(); ++k)
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += p.weights[k] * p.atoms[k][i];
  return e;
}

Q vec_distance(const Vec& a, const Vec& b, VecMetric metric, const NumericMode& mode) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  switch (metric) {
    case VecMetric::l1: {
      Q s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += q_abs(a[i] - b[i]);
      return s;
    }
    case VecMetric::linf: {
      Q s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s = q_max(s, q_abs(a[i] - b[i]));
      return s;
    }
    case VecMetric::l2: {
      if (mode.exact)
        throw std::domain_error("l2 distances are irrational; use approximate mode");
      double s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = Q(a[i] - b[i]).get_d();
        s += d * d;
      }
      return Q(std::sqrt(s));
    }
  }
  throw std::invalid_argument("unknown metric");
}

AtomSpace atoms_space(const ConeSpace& space, const std::vector<Vec>& atoms, VecMetric metric) {
  AtomSpace out;
  std::vector<Vec> distinct;
  for (const Vec& a : atoms) {
    require_dim(space.cone, a);
    int found = -1;
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (distinct[j] == a) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(distinct.size());
      distinct.push_back(a);
    }
    out.index.push_back(found);
  }
  const int n = static_cast<int>(distinct.size());
  std::vector<std::string> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = "v" + std::to_string(i);
  Mat<Q> dist(n, n);
  Mat<uint8_t> leq(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dist(i, j) = vec_distance(distinct[i], distinct[j], metric, space.mode);
      leq(i, j) = cone_contains(space.cone, sub(distinct[j], distinct[i]));
    }
  out.space = make_space(std::move(pts), std::move(dist), std::move(leq), space.mode);
  return out;
}

Measure as_measure(const PointMeasure& p, const AtomSpace& as, int offset) {
  std::vector<std::pair<int, Q>> raw;
  for (std::size_t k = 0; k < p.atoms.size(); ++k)
    raw.emplace_back(as.index.at(offset + k), p.weights[k]);
  return make_measure(as.space, std::move(raw));
}

StrictMonoVerdict check_strict_monotonicity(const ConeSpace& space, const PointMeasure& p,
                                            const PointMeasure& q, VecMetric metric) {
  std::vector<Vec> all = p.atoms;
  all.insert(all.end(), q.atoms.begin(), q.atoms.end());
  const AtomSpace as = atoms_space(space, all, metric);
  const Measure mp = as_measure(p, as, 0);
  const Measure mq = as_measure(q, as, static_cast<int>(p.atoms.size()));
  if (!order_by_coupling(mp, mq).holds)
    throw std::domain_error("precondition failed: p is not stochastically below q");

  StrictMonoVerdict v;
  v.measures_equal = mp.weights == mq.weights;
  const Vec ep = barycenter(p), eq = barycenter(q);
  v.barycenters_equal = ep == eq;
  if (v.barycenters_equal && !v.measures_equal)
    throw internal_check_error("equal barycenters with distinct ordered measures");
  if (!v.measures_equal) {
    if (!cone_leq(space, ep, eq))
      throw internal_check_error("barycenter map is not monotone");
    v.strict_increase = !v.barycenters_equal;
    if (!v.strict_increase)
      throw internal_check_error("strict order did not increase the barycenter");
  }
  return v;
}

MapCheckResult classify_map(const VecFn& f, const ConeSpace& in, const ConeSpace& out,
                            const std::vector<PointMeasure>& samples, VecMetric metric) {
  MapCheckResult res;
  // sample domain: atoms plus barycenters, where f must be evaluable
  std::vector<Vec> domain;
  for (const PointMeasure& p : samples) {
    for (const Vec& a : p.atoms) domain.push_back(a);
    domain.push_back(barycenter(p));
  }
  std::vector<Vec> images;
  images.reserve(domain.size());
  for (const Vec& v : domain) {
    Vec fv = f(v);
    if (static_cast<int>(fv.size()) != out.cone.dim)
      throw std::invalid_argument("map image dimension mismatch");
    images.push_back(std::move(fv));
  }
  res.candidate_ok = true;
  for (std::size_t a = 0; a < domain.size() && res.candidate_ok; ++a)
    for (std::size_t b = 0; b < domain.size(); ++b) {
      if (a == b) continue;
      const Q din = vec_distance(domain[a], domain[b], metric, in.mode);
      const Q dout = vec_distance(images[a], images[b], metric, in.mode);
      const bool short_ok = in.mode.leq(dout, din);
      const bool mono_ok = !cone_contains(in.cone, sub(domain[b], domain[a])) ||
                           cone_contains(out.cone, sub(images[b], images[a]));
      if (!short_ok || !mono_ok) {
        res.candidate_ok = false;
        res.candidate_violation = {static_cast<int>(a), static_cast<int>(b)};
        break;
      }
    }
  if (!res.candidate_ok) return res;

  bool all_eq = true, all_le = true, all_ge = true;
  Q best_lax = 0, best_oplax = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const PointMeasure& p = samples[k];
    Vec lhs(out.cone.dim, Q(0));  // e(pushforward(f, p))
    for (std::size_t a = 0; a < p.atoms.size(); ++a) {
      const Vec fa = f(p.atoms[a]);
      for (int i = 0; i < out.cone.dim; ++i) lhs[i] += p.weights[a] * fa[i];
    }
    const Vec rhs = f(barycenter(p));  // f(e(p))
    const bool le = cone_contains(out.cone, sub(rhs, lhs));
    const bool ge = cone_contains(out.cone, sub(lhs, rhs));
    int code;
    if (le && ge)
      code = 0;  // pointed cone: equality
    else if (le)
      code = 1;
    else if (ge)
      code = 2;
    else
      code = 3;
    res.comparisons.push_back(code);
    all_eq &= code == 0;
    all_le &= code == 0 || code == 1;
    all_ge &= code == 0 || code == 2;
    Q gap = 0;
    for (int i = 0; i < out.cone.dim; ++i) gap += q_abs(rhs[i] - lhs[i]);
    if (code == 1 && gap > best_lax) {
      best_lax = gap;
      res.lax_certificate = static_cast<int>(k);
    }
    if (code == 2 && gap > best_oplax) {
      best_oplax = gap;
      res.oplax_certificate = static_cast<int>(k);
    }
  }
  if (all_eq)
    res.verdict = MapClass::affine;
  else if (all_le)
    res.verdict = MapClass::lax;
  else if (all_ge)
    res.verdict = MapClass::oplax;
  else
    res.verdict = MapClass::both_violated;
  return res;
}

BinaryAxiomVerdict binary_axiom_check(const ConeSpace& space,
                                      const std::vector<BinarySample>& samples) {
  BinaryAxiomVerdict v;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const BinarySample& s = samples[k];
    if (s.lambda < 0 || s.lambda > 1) throw std::invalid_argument("lambda outside [0, 1]");
    if (!cone_leq(space, s.a, s.b)) throw std::invalid_argument("sample requires a <= b");
    const Q l = s.lambda, r = Q(1) - s.lambda;
    Vec lhs(s.a.size()), rhs(s.a.size());
    for (std::size_t i = 0; i < s.a.size(); ++i) {
      lhs[i] = l * s.a[i] + r * s.c[i];
      rhs[i] = l * s.b[i] + r * s.c[i];
    }
    const bool direct = cone_leq(space, lhs, rhs);
    // cross-check: the same inequality through barycenters of the mixtures
    bool via_e;
    if (l == 0) {
      via_e = cone_leq(space, s.c, s.c);
    } else if (l == 1) {
      via_e = cone_leq(space, s.a, s.b);
    } else {
      const PointMeasure pm_p = make_point_measure(space, {s.a, s.c}, {l, r});
      const PointMeasure pm_q = make_point_measure(space, {s.b, s.c}, {l, r});
      via_e = cone_leq(space, barycenter(pm_p), barycenter(pm_q));
    }
    if (!direct) {
      v.holds = false;
      v.failing_sample = static_cast<int>(k);
    }
    if (direct != via_e) {
      v.cross_check_agrees = false;
      v.failing_sample = static_cast<int>(k);
    }
  }
  return v;
}

DlScalingVerdict dl_scaling_check(const ConeSpace& space, const Vec& x, const Vec& y, const Vec& z,
                                  const Q& alpha, VecMetric metric) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha outside [0, 1]");
  const Q beta = Q(1) - alpha;
  auto combo = [&](const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = alpha * a[i] + beta * b[i];
    return r;
  };
  const Vec xa = combo(x, z), ya = combo(y, z), yp = combo(y, x);
  const std::vector<Vec> pts{x, y, z, xa, ya, yp};
  const AtomSpace as = atoms_space(space, pts, metric);
  const LawvereSpace l = l_distance(*as.space);
  DlScalingVerdict v;
  v.lhs = l.d(as.index[3], as.index[4]);
  v.rhs = alpha * l.d(as.index[0], as.index[1]);
  v.holds = space.mode.eq(v.lhs, v.rhs);
  return v;
}

}  // namespace ordot
