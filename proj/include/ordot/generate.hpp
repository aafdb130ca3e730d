#pragma once

#include <random>

#include "ordot/barycentric.hpp"

namespace ordot::gen {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// A positive rational with small numerator and denominator.
Q small_q(Rng& rng, int max_num = 8, int max_den = 6);

/// A random valid ordered metric space: shortest-path closure of a random
/// positive symmetric weight matrix, plus the reachability order of a random
/// increasing-edge DAG.
SpacePtr random_space(Rng& rng, int min_pts, int max_pts,
                      NumericMode mode = NumericMode::Exact());

/// A random measure with bounded support size and weight denominators.
Measure random_measure(Rng& rng, SpacePtr base, int max_support = 6, int max_den = 12);

/// A measure above p in the stochastic order, built by moving random mass
/// fractions upward along the order.
Measure random_upward(Rng& rng, const Measure& p, int moves = 3);

NestedMeasure random_nested(Rng& rng, SpacePtr base, int max_inner = 3);

Tuple random_tuple(Rng& rng, const Space& x, int len);

/// A tuple componentwise above xs (each entry moved to a random upper point).
Tuple random_tuple_above(Rng& rng, const Space& x, const Tuple& xs);

/// All short monotone maps X -> Y found by backtracking search, up to `limit`.
std::vector<std::vector<int>> short_monotone_maps(const Space& x, const Space& y, int limit);

Vec random_vec(Rng& rng, int dim, int lo = -4, int hi = 4, int max_den = 4);

Cone orthant(int dim);

/// Truncation of the cone { x : x_0 >= |x_j| / j for j >= 1 } to `dim`
/// coordinates, written as 2 (dim - 1) inequality rows.
Cone linf_cone(int dim);

/// A vector in the cone (nonnegative row application not guaranteed for
/// arbitrary cones; provided for orthant and linf_cone).
Vec random_cone_vec(Rng& rng, const Cone& cone, int hi = 4, int max_den = 4);

/// The depth-n truncation of the non-L-ordered example space: four families
/// a_k, b_k, c_k, d_k (k = 1..n) with limits a and d, generator distances
/// 1/k, far pairs at distance 2, order a_k <= b_k and c_k <= d_k. Point "a"
/// is index 0 and "d" is the last index.
SpacePtr non_l_ordered_truncation(int depth);

}  // namespace ordot::gen
