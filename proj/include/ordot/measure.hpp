#pragma once

#include <utility>
#include <vector>

#include "ordot/ometric.hpp"

namespace ordot {

/// A finitely supported probability measure on a Space. Weights are strictly
/// positive exact rationals summing to 1, sorted by point index.
struct Measure {
  SpacePtr base;
  std::vector<std::pair<int, Q>> weights;

  Q at(int point) const;  // weight of a point, 0 off support
};

/// Normalizes raw (point, weight) pairs: merges duplicates, strips zero-weight
/// atoms, rejects negatives. The sum must be exactly 1; in approximate mode a
/// sum within tolerance of 1 is rescaled to exactly 1.
Measure make_measure(SpacePtr base, std::vector<std::pair<int, Q>> raw);

Measure dirac(SpacePtr base, int x);

/// Uniform measure of a tuple: weight = multiplicity / N.
Measure empirical(SpacePtr base, const Tuple& t);

/// Pushforward along a point map f (indices of `target` per point of p's
/// base; f needs to be defined on the support of p, use -1 elsewhere).
Measure pushforward(const std::vector<int>& f, const Measure& p, SpacePtr target);

/// An element of PPX: outer weights over measures on a common base space.
struct NestedMeasure {
  std::vector<Measure> inner;
  std::vector<Q> outer;
};

NestedMeasure make_nested(std::vector<Measure> inner, std::vector<Q> outer);

/// E : PPX -> PX, weight of x = sum_i outer_i * inner_i(x).
Measure expectation(const NestedMeasure& mu);

/// Product measure on the tensor space (weight(x,y) = p(x) q(y)). `xy` must
/// be tensor(p.base, q.base).
Measure product_measure(const Measure& p, const Measure& q, SpacePtr xy);

/// Marginals of a measure on tensor(x, y): row sums and column sums.
std::pair<Measure, Measure> marginals(const Measure& r, SpacePtr x, SpacePtr y);

/// Exact equality of weight tables (bases compared by pointer).
bool same_measure(const Measure& a, const Measure& b);

/// Integral of a function given by one value per point of the base space.
Q integrate(const Measure& p, const std::vector<Q>& f);

}  // namespace ordot
