#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ordot/storder.hpp"

namespace ordot {

using Vec = std::vector<Q>;

/// A polyhedral convex cone in inequality form: { x : a . x >= 0 per row a }.
struct Cone {
  int dim = 0;
  std::vector<Vec> rows;
};

struct DomainConstraint {
  Vec row;
  Q rhs;  // row . x >= rhs
};

/// A cone-ordered finite-dimensional space: x <= y iff y - x lies in the
/// cone. The cone must be pointed (kernel of the row matrix trivial) so that
/// the order is antisymmetric; make_cone_space verifies this.
struct ConeSpace {
  Cone cone;
  std::vector<DomainConstraint> domain;
  NumericMode mode = NumericMode::Exact();
};

ConeSpace make_cone_space(Cone cone, std::vector<DomainConstraint> domain = {},
                          NumericMode mode = NumericMode::Exact());

bool cone_contains(const Cone& cone, const Vec& v);
bool cone_pointed(const Cone& cone);  // exact kernel-rank check
bool cone_leq(const ConeSpace& space, const Vec& x, const Vec& y);
bool in_domain(const ConeSpace& space, const Vec& x);

/// Hahn-Banach separation at polyhedral scale. Solves the LP
///   min (A v) . y  s.t.  y >= 0, sum y = 1
/// over multipliers y; a negative optimum yields h = y^T A, a monotone linear
/// functional with h(v) < 0, rescaled so its largest coefficient has absolute
/// value 1. Returns nothing iff v lies in the cone.
std::optional<Vec> separate(const Cone& cone, const Vec& v);

/// A finitely supported measure on a cone-ordered space.
struct PointMeasure {
  std::vector<Vec> atoms;
  std::vector<Q> weights;
};

/// Canonicalizes: merges duplicate atoms, strips zero weights, checks the sum
/// is 1 and that atoms satisfy the domain constraints.
PointMeasure make_point_measure(const ConeSpace& space, std::vector<Vec> atoms,
                                std::vector<Q> weights);

/// The algebra map e: weighted average of the atoms.
Vec barycenter(const PointMeasure& p);

enum class VecMetric { l1, l2, linf };

/// Distance between vectors; l2 requires approximate mode (square roots are
/// not rational) and throws std::domain_error in exact mode.
Q vec_distance(const Vec& a, const Vec& b, VecMetric metric, const NumericMode& mode);

/// The finite ordered metric space induced by a set of atoms: the chosen
/// vector metric and the cone order. `index` maps input atoms to points.
struct AtomSpace {
  SpacePtr space;
  std::vector<int> index;
};
AtomSpace atoms_space(const ConeSpace& space, const std::vector<Vec>& atoms,
                      VecMetric metric = VecMetric::l1);

/// A PointMeasure as a Measure on a materialized atom space.
Measure as_measure(const PointMeasure& p, const AtomSpace& as, int offset);

struct StrictMonoVerdict {
  bool barycenters_equal = false;
  bool measures_equal = false;
  bool strict_increase = false;  // e(p) < e(q) in the cone order (when p != q)
};

/// Requires p <= q in the stochastic order over the atoms' cone order
/// (decided by the coupling method; std::domain_error otherwise). Verifies
/// that equal barycenters force equal measures and that distinct measures
/// have strictly increasing barycenters.
StrictMonoVerdict check_strict_monotonicity(const ConeSpace& space, const PointMeasure& p,
                                            const PointMeasure& q, VecMetric metric = VecMetric::l1);

enum class MapClass { affine, lax, oplax, both_violated };

using VecFn = std::function<Vec(const Vec&)>;

struct MapCheckResult {
  bool candidate_ok = false;  // short and monotone on the sampled points
  std::optional<std::pair<int, int>> candidate_violation;
  MapClass verdict = MapClass::both_violated;
  // per sample measure: 0 equal, 1 e(f p) < f(e p) (lax), 2 > (oplax), 3 incomparable
  std::vector<int> comparisons;
  int lax_certificate = -1;    // sample index with the largest lax gap
  int oplax_certificate = -1;  // sample index with the largest oplax gap
};

/// Compares e(pushforward(f, p)) with f(e(p)) in the output cone order on
/// every sample measure. Refutation-sound only: verdicts describe the
/// samples, not the whole domain.
MapCheckResult classify_map(const VecFn& f, const ConeSpace& in, const ConeSpace& out,
                            const std::vector<PointMeasure>& samples,
                            VecMetric metric = VecMetric::l1);

struct BinarySample {
  Vec a, b, c;  // requires a <= b
  Q lambda;     // in [0, 1]
};

struct BinaryAxiomVerdict {
  bool holds = true;             // direct cone arithmetic on every sample
  bool cross_check_agrees = true;  // barycenter route gives the same verdicts
  std::optional<int> failing_sample;
};

/// The ordered-barycentric-algebra axiom a <= b => la + (1-l)c <= lb + (1-l)c,
/// cross-checked against monotonicity of e on mixture measures built from the
/// same samples.
BinaryAxiomVerdict binary_axiom_check(const ConeSpace& space, const std::vector<BinarySample>& samples);

struct DlScalingVerdict {
  bool holds = false;
  Q lhs, rhs;  // d_L(ax+(1-a)z, ay+(1-a)z) on the finite closure vs a d_L(x,y)
};

/// Checks the scaling identity of the L-distance on the finite subspace
/// spanned by the proof points {x, y, z, ax+(1-a)z, ay+(1-a)z, ay+(1-a)x}.
/// The finite-subspace d_L upper-bounds the ambient one; equality is asserted
/// only at the tested alpha, whose proof points are all included.
DlScalingVerdict dl_scaling_check(const ConeSpace& space, const Vec& x, const Vec& y, const Vec& z,
                                  const Q& alpha, VecMetric metric = VecMetric::l1);

}  // namespace ordot
