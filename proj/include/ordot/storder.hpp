#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ordot/transport.hpp"

namespace ordot {

enum class OrderMethod { coupling, upper_sets, duality };

/// A short monotone function with a strict integral gap, the duality-side
/// refutation of p <= q: sum f dp - sum f dq = gap > 0.
struct GapWitness {
  std::vector<std::pair<int, Q>> f;  // values on the involved points
  Q gap;
};

/// Verdict plus re-verifiable evidence for one decision procedure.
struct OrderWitness {
  bool holds = false;
  OrderMethod method = OrderMethod::coupling;
  std::optional<Coupling> coupling;           // positive: supported on {<=}
  std::optional<std::vector<int>> upper_set;  // negative: upper C with p(C) > q(C)
  std::optional<GapWitness> gap;              // negative: duality witness
};

/// Decides p <= q as a max-flow feasibility problem on the bipartite graph
/// support(p) -> support(q) with arcs only where x <= y. On failure the
/// minimum cut yields a violating upper set.
OrderWitness order_by_coupling(const Measure& p, const Measure& q);

/// Kellerer's criterion: p(C) <= q(C) for every upper set C, enumerated via
/// antichains of minimal elements. Oracle path; throws std::domain_error
/// beyond `oracle_bound` points.
OrderWitness order_by_upper_sets(const Measure& p, const Measure& q, int oracle_bound = 16);

/// Kantorovich-duality criterion: the optimal d_L-transport cost is zero.
/// On failure the negated dual potential is a short monotone function with a
/// strict integral gap. Checks L-orderedness first (it can only fail in
/// approximate mode); throws std::domain_error when it does.
OrderWitness order_by_duality(const Measure& p, const Measure& q);

/// Independently re-checks the evidence carried by a witness.
bool verify_witness(const OrderWitness& w, const Measure& p, const Measure& q);

/// Splitting lemma: a common refinement K with uniform-fiber maps phi: K -> N
/// and psi: K -> M such that xs[phi(k)] <= ys[psi(k)] for every k.
struct SplitResult {
  UniformFiberMap phi;
  UniformFiberMap psi;
};

/// Refusal (the negative OrderWitness) iff empirical(xs) <= empirical(ys) fails.
std::variant<SplitResult, OrderWitness> split(const SpacePtr& x, const Tuple& xs, const Tuple& ys);

/// Corollary for equal length: a permutation with xs[n] <= ys[sigma(n)], found
/// as a perfect matching on the support of the bistochastic coupling.
std::variant<std::vector<int>, OrderWitness> permutation_split(const SpacePtr& x, const Tuple& xs,
                                                               const Tuple& ys);

struct DensityResult {
  Tuple xs, ys;  // componentwise ordered, empirical distributions near p and q
};

/// Order density: componentwise-ordered tuples whose empirical distributions
/// approximate p and q within eps. Exact mode represents p and q exactly
/// (N = least common denominator of the order-supported coupling); in
/// approximate mode N is the least value with (#support pairs) * diam / N
/// < eps and the coupling is rounded by largest remainder over its support.
std::variant<DensityResult, OrderWitness> order_density_approx(const Measure& p, const Measure& q,
                                                               const Q& eps);

using PairTuple = std::vector<std::pair<int, int>>;

struct LiftResult {
  PairTuple lifted;           // s[n] = (p[sigma_x(n)], q[sigma_y(n)])
  Q dist;                     // d(r, s) in (X (x) Y)^N = sum of the two optima
  std::vector<int> sigma_x, sigma_y;
};

/// Metric lifting along the marginal map at empirical scale: two independent
/// assignment solves align r's coordinates with the prescribed marginals.
LiftResult marginal_lift(const Space& x, const Space& y, const PairTuple& r, const Tuple& pbar,
                         const Tuple& qbar);

struct AntisymmetryVerdict {
  bool p_le_q = false;
  bool q_le_p = false;
  bool equal = false;                // weight tables equal (when both directions hold)
  std::optional<GapWitness> strict;  // witness of the failing direction, when one-sided
};

/// Decides both directions by duality. When both hold the measures are
/// asserted equal (an inequality here is an internal bug in exact mode).
AntisymmetryVerdict check_antisymmetry(const Measure& p, const Measure& q);

/// The finite subspace of PX spanned by the given measures: points are the
/// deduplicated measures, the metric is the Wasserstein distance and the
/// order is the stochastic order (coupling method). `index` maps each input
/// to its point.
struct MeasureSpace {
  SpacePtr space;
  std::vector<int> index;
};

MeasureSpace measure_space(const std::vector<Measure>& ms);

/// A nested measure as a measure on a materialized PX subspace; `offset` is
/// the position of mu's first inner measure in the list measure_space saw.
Measure outer_measure(const NestedMeasure& mu, const MeasureSpace& ps, int offset);

}  // namespace ordot
