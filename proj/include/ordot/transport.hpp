#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ordot/matrix.hpp"
#include "ordot/measure.hpp"

namespace ordot {

/// A coupling of two measures on a common base: a nonnegative mass table
/// over support(p) x support(q) whose row sums are p and column sums are q.
struct Coupling {
  SpacePtr base;
  std::vector<int> rows;  // support points of p
  std::vector<int> cols;  // support points of q
  Mat<Q> mass;

  Q total_cost(const std::function<Q(int, int)>& cost) const;
};

/// Kantorovich dual witness: one rational per involved point, satisfying
/// f(y) - f(x) <= c(x,y) on the union of supports for the certified cost.
struct Potential {
  std::vector<std::pair<int, Q>> f;  // sorted by point index
  Q at(int point) const;             // throws if the point is not in scope
};

struct TransportResult {
  Q value;
  Coupling plan;
  Potential potential;
};

using CostFn = std::function<Q(int, int)>;

/// Minimum-cost coupling by the exact transportation simplex (network
/// simplex on the bipartite transportation graph, Bland's rule). The cost
/// must vanish on the diagonal and satisfy the triangle inequality on the
/// union of supports (both d and d_L qualify); symmetry is not assumed.
/// Every solve self-certifies: marginals, dual feasibility, complementary
/// slackness and a zero duality gap are verified exactly before returning.
TransportResult min_cost_coupling(const CostFn& cost, const Measure& p, const Measure& q);

/// Kantorovich-Wasserstein distance: min_cost_coupling with cost = d.
TransportResult wasserstein(const Measure& p, const Measure& q);

struct Assignment {
  Q value;                // (1/N) min_sigma sum_n d(xs[n], ys[sigma(n)])
  std::vector<int> perm;  // attaining permutation
};

/// Optimal assignment between equal-length tuples under the mean-distance
/// metric of X^N. Hungarian method up to `hungarian_limit`, transportation
/// simplex on the unit-supply bipartite problem above it (its basic optimum
/// is a permutation). Equals wasserstein(empirical(xs), empirical(ys)).
Assignment assignment_distance(const Space& x, const Tuple& xs, const Tuple& ys,
                               int hungarian_limit = 64);

}  // namespace ordot
