#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordot/matrix.hpp"
#include "ordot/numeric.hpp"

namespace ordot {

/// A finite metric space carrying a partial order. Distances are exact
/// rationals; `leq` is the full relation matrix. Immutable after
/// construction; shared via SpacePtr.
struct Space {
  std::vector<std::string> points;
  Mat<Q> dist;
  Mat<uint8_t> leq;
  NumericMode mode = NumericMode::Exact();

  int size() const { return static_cast<int>(points.size()); }
  const Q& d(int i, int j) const { return dist(i, j); }
  bool le(int i, int j) const { return leq(i, j) != 0; }
  /// Index of a point label, -1 if absent.
  int index_of(std::string_view label) const;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::vector<std::string> points, Mat<Q> dist, Mat<uint8_t> leq,
                    NumericMode mode = NumericMode::Exact());

/// A point of a power space X^N, stored as point indices into the base space.
using Tuple = std::vector<int>;

struct Violation {
  std::string axiom;       // e.g. "triangle", "antisymmetry"
  std::vector<int> where;  // offending indices
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks all metric axioms (zero diagonal, symmetry, positivity, triangle
/// inequality) and order axioms (reflexivity, antisymmetry, transitivity).
/// Violations are report entries, never exceptions. In approximate mode the
/// inequality axioms are flagged only when violated beyond the tolerance.
ValidationReport validate(const Space& x);

/// Monoidal product: pairs of points, l1-sum of the metrics, product order.
SpacePtr tensor(const Space& x, const Space& y);

/// Point index of the pair (i, j) in tensor(x, y) (row-major).
int tensor_index(const Space& x, const Space& y, int i, int j);

/// N-fold power: tuples, mean of componentwise distances, componentwise
/// order. Materializes all |X|^N points; refuses beyond `materialize_bound`
/// (work with Tuple values and the tuple_* helpers instead).
SpacePtr power(const Space& x, int n, long long materialize_bound = 100000);

/// Mean of componentwise distances: the metric of X^N without materializing it.
Q tuple_distance(const Space& x, const Tuple& s, const Tuple& t);

/// Componentwise order of X^N.
bool tuple_leq(const Space& x, const Tuple& s, const Tuple& t);

/// A surjection whose fibers all have the same cardinality.
struct UniformFiberMap {
  int source_size = 0;          // |M|
  int target_size = 0;          // |N|
  std::vector<int> assignment;  // value in [0, target_size) per source element

  int operator()(int m) const { return assignment[m]; }
};

ValidationReport validate(const UniformFiberMap& phi);

/// Precomposition with phi: M -> N sends a tuple of X^N to one of X^M,
/// out[m] = t[phi(m)]. The induced map is an isometric order embedding.
/// Throws std::invalid_argument if phi is not uniform-fiber or lengths mismatch.
Tuple power_embedding(const UniformFiberMap& phi, const Tuple& t);

}  // namespace ordot
