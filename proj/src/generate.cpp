#include "ordot/generate.hpp"

#include <algorithm>
#include <map>

#include "ordot/lp.hpp"

namespace ordot::gen {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Q small_q(Rng& rng, int max_num, int max_den) {
  return make_q(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
}

SpacePtr random_space(Rng& rng, int min_pts, int max_pts, NumericMode mode) {
  const int n = uniform_int(rng, min_pts, max_pts);
  Mat<Q> dist(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // weights in [1/4, 8]; the shortest-path closure keeps them positive
      const Q w = make_q(uniform_int(rng, 1, 8), uniform_int(rng, 1, 4));
      dist(i, j) = dist(j, i) = w;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == k || j == k || i == j) continue;
        const Q via = dist(i, k) + dist(k, j);
        if (via < dist(i, j)) dist(i, j) = via;
      }
  // reachability order of a random DAG on increasing indices
  Mat<uint8_t> leq(n, n, 0);
  for (int i = 0; i < n; ++i) leq(i, i) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform_int(rng, 0, 2) == 0) leq(i, j) = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq(i, k) && leq(k, j)) leq(i, j) = 1;
  std::vector<std::string> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = "x" + std::to_string(i);
  return make_space(std::move(pts), std::move(dist), std::move(leq), mode);
}

Measure random_measure(Rng& rng, SpacePtr base, int max_support, int max_den) {
  const int n = base->size();
  const int support = uniform_int(rng, 1, std::min(max_support, n));
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<long> parts(support);
  long total = 0;
  for (int k = 0; k < support; ++k) total += parts[k] = uniform_int(rng, 1, max_den);
  std::vector<std::pair<int, Q>> raw;
  for (int k = 0; k < support; ++k) raw.emplace_back(perm[k], make_q(parts[k], total));
  return make_measure(std::move(base), std::move(raw));
}

Measure random_upward(Rng& rng, const Measure& p, int moves) {
  const Space& x = *p.base;
  std::map<int, Q> w(p.weights.begin(), p.weights.end());
  for (int step = 0; step < moves; ++step) {
    std::vector<int> support;
    for (const auto& [i, q] : w)
      if (q > 0) support.push_back(i);
    const int from = support[uniform_int(rng, 0, static_cast<int>(support.size()) - 1)];
    std::vector<int> ups;
    for (int z = 0; z < x.size(); ++z)
      if (x.le(from, z) && z != from) ups.push_back(z);
    if (ups.empty()) continue;
    const int to = ups[uniform_int(rng, 0, static_cast<int>(ups.size()) - 1)];
    const Q fraction = make_q(uniform_int(rng, 1, 4), 4);
    const Q amount = w[from] * fraction;
    w[from] -= amount;
    w[to] += amount;
  }
  std::vector<std::pair<int, Q>> raw(w.begin(), w.end());
  return make_measure(p.base, std::move(raw));
}

NestedMeasure random_nested(Rng& rng, SpacePtr base, int max_inner) {
  const int k = uniform_int(rng, 1, max_inner);
  std::vector<Measure> inner;
  std::vector<long> parts(k);
  long total = 0;
  for (int i = 0; i < k; ++i) {
    inner.push_back(random_measure(rng, base));
    total += parts[i] = uniform_int(rng, 1, 6);
  }
  std::vector<Q> outer(k);
  for (int i = 0; i < k; ++i) outer[i] = make_q(parts[i], total);
  return make_nested(std::move(inner), std::move(outer));
}

Tuple random_tuple(Rng& rng, const Space& x, int len) {
  Tuple t(len);
  for (int i = 0; i < len; ++i) t[i] = uniform_int(rng, 0, x.size() - 1);
  return t;
}

Tuple random_tuple_above(Rng& rng, const Space& x, const Tuple& xs) {
  Tuple ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> ups;
    for (int z = 0; z < x.size(); ++z)
      if (x.le(xs[i], z)) ups.push_back(z);
    ys[i] = ups[uniform_int(rng, 0, static_cast<int>(ups.size()) - 1)];
  }
  return ys;
}

std::vector<std::vector<int>> short_monotone_maps(const Space& x, const Space& y, int limit) {
  std::vector<std::vector<int>> found;
  std::vector<int> f(x.size(), -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (static_cast<int>(found.size()) >= limit) return;
    if (i == x.size()) {
      found.push_back(f);
      return;
    }
    for (int c = 0; c < y.size(); ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (y.d(c, f[j]) > x.d(i, j)) ok = false;
        if (x.le(i, j) && !y.le(c, f[j])) ok = false;
        if (x.le(j, i) && !y.le(f[j], c)) ok = false;
      }
      if (!ok) continue;
      f[i] = c;
      self(self, i + 1);
      f[i] = -1;
    }
  };
  rec(rec, 0);
  return found;
}

Vec random_vec(Rng& rng, int dim, int lo, int hi, int max_den) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = make_q(uniform_int(rng, lo, hi), uniform_int(rng, 1, max_den));
  return v;
}

Cone orthant(int dim) {
  Cone c;
  c.dim = dim;
  for (int i = 0; i < dim; ++i) {
    Vec row(dim, Q(0));
    row[i] = 1;
    c.rows.push_back(std::move(row));
  }
  return c;
}

Cone linf_cone(int dim) {
  if (dim < 2) throw std::invalid_argument("linf cone needs dimension >= 2");
  Cone c;
  c.dim = dim;
  for (int j = 1; j < dim; ++j)
    for (int sign : {-1, 1}) {
      Vec row(dim, Q(0));
      row[0] = j;
      row[j] = sign;
      c.rows.push_back(std::move(row));
    }
  return c;
}

Vec random_cone_vec(Rng& rng, const Cone& cone, int hi, int max_den) {
  // random vector pushed into the cone along an interior direction found by LP
  Vec v = random_vec(rng, cone.dim, -hi, hi, max_den);
  if (cone_contains(cone, v)) return v;
  lp::Problem prob;
  for (int i = 0; i < cone.dim; ++i) prob.add_var(Q(0), /*is_free=*/true);
  const int t = prob.add_var(Q(1), /*is_free=*/false);
  prob.maximize = true;
  for (const Vec& row : cone.rows) {
    std::vector<Q> r(prob.num_vars, Q(0));
    for (int i = 0; i < cone.dim; ++i) r[i] = row[i];
    r[t] = -1;
    prob.add_row(std::move(r), lp::Rel::ge, Q(0));  // a.x >= t
  }
  for (int i = 0; i < cone.dim; ++i) {
    std::vector<Q> r(prob.num_vars, Q(0));
    r[i] = 1;
    prob.add_row(r, lp::Rel::le, Q(1));
    r[i] = -1;
    // -x_i <= 1, keeping the box bounded
    std::vector<Q> r2(prob.num_vars, Q(0));
    r2[i] = -1;
    prob.add_row(std::move(r2), lp::Rel::le, Q(1));
  }
  const lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal || sol.objective <= 0)
    throw std::invalid_argument("cone has no interior point");
  Vec dir(sol.x.begin(), sol.x.begin() + cone.dim);
  // smallest multiplier making every row nonnegative, plus margin
  Q lambda = 0;
  for (const Vec& row : cone.rows) {
    Q av = 0, ad = 0;
    for (int i = 0; i < cone.dim; ++i) {
      av += row[i] * v[i];
      ad += row[i] * dir[i];
    }
    if (av < 0) lambda = q_max(lambda, -av / ad);
  }
  lambda += 1;
  for (int i = 0; i < cone.dim; ++i) v[i] += lambda * dir[i];
  return v;
}

SpacePtr non_l_ordered_truncation(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const int n = depth;
  const int total = 4 * n + 2;
  const int a = 0, d = total - 1;
  auto a_k = [n](int k) { return 1 + (k - 1); };
  auto b_k = [n](int k) { return 1 + n + (k - 1); };
  auto c_k = [n](int k) { return 1 + 2 * n + (k - 1); };
  auto d_k = [n](int k) { return 1 + 3 * n + (k - 1); };

  std::vector<std::string> pts(total);
  pts[a] = "a";
  pts[d] = "d";
  for (int k = 1; k <= n; ++k) {
    pts[a_k(k)] = "a" + std::to_string(k);
    pts[b_k(k)] = "b" + std::to_string(k);
    pts[c_k(k)] = "c" + std::to_string(k);
    pts[d_k(k)] = "d" + std::to_string(k);
  }
  // far pairs at distance 2; generator edges 1/k; shortest-path closure
  Mat<Q> dist(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) dist(i, j) = (i == j) ? Q(0) : Q(2);
  for (int k = 1; k <= n; ++k) {
    const Q w = make_q(1, k);
    dist(a, a_k(k)) = dist(a_k(k), a) = w;
    dist(d, d_k(k)) = dist(d_k(k), d) = w;
    dist(b_k(k), c_k(k)) = dist(c_k(k), b_k(k)) = w;
  }
  for (int k = 0; k < total; ++k)
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) {
        if (i == j) continue;
        const Q via = dist(i, k) + dist(k, j);
        if (via < dist(i, j)) dist(i, j) = via;
      }

  Mat<uint8_t> leq(total, total, 0);
  for (int i = 0; i < total; ++i) leq(i, i) = 1;
  for (int k = 1; k <= n; ++k) {
    leq(a_k(k), b_k(k)) = 1;
    leq(c_k(k), d_k(k)) = 1;
  }
  return make_space(std::move(pts), std::move(dist), std::move(leq));
}

}  // namespace ordot::gen
