#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordot/ometric.hpp"

namespace ordot {

/// A finite Lawvere metric space: zero diagonal and triangle inequality,
/// symmetry not required. All values finite.
struct LawvereSpace {
  std::vector<std::string> points;
  Mat<Q> dl;
  NumericMode mode = NumericMode::Exact();

  int size() const { return static_cast<int>(points.size()); }
  const Q& d(int i, int j) const { return dl(i, j); }
};

ValidationReport validate(const LawvereSpace& x);

/// The L-distance of an ordered metric space: the largest Lawvere metric
/// below d that vanishes on ordered pairs. Computed as all-pairs shortest
/// paths over the digraph with weight-d(u,v) edges between all pairs and
/// weight-0 edges u -> v whenever u <= v. Equals the supremum over short
/// monotone functions f of f(x) - f(y); dl_via_potentials is the
/// independent route to the same value.
LawvereSpace l_distance(const Space& x);

struct DlWitness {
  Q value;
  std::vector<Q> f;  // one value per point; short, monotone, f[y] == 0
};

/// max f(x) - f(y) over f with f(u) - f(v) <= d(u,v) for all u,v and
/// f(u) <= f(v) for all u <= v, solved as an exact LP. The witness attains
/// the value and is anchored at f(y) = 0.
DlWitness dl_via_potentials(const Space& x, int from, int to);

/// One LP per anchor: maximizing the sum of a monotone short potential with
/// f(anchor) = 0 yields its pointwise maximum, i.e. d_L(u, anchor) for every
/// u simultaneously. Same feasible set as dl_via_potentials, batched.
std::vector<Q> dl_column_via_potentials(const Space& x, int anchor);

struct LOrderedReport {
  bool l_ordered = true;
  std::optional<std::pair<int, int>> counterexample;  // d_L(x,y) = 0 but x !<= y
};

/// A finite valid ordered metric space is always L-ordered in exact mode;
/// in approximate mode distances below tolerance can break it.
LOrderedReport is_l_ordered(const Space& x);

struct SymmetrizeResult {
  SpacePtr space;
  std::vector<int> cls;  // input point -> quotient point
};

/// The functor S: points with mutually zero distances are merged, the metric
/// is max(dl(x,y), dl(y,x)), and x <= y iff dl(x,y) = 0.
SymmetrizeResult symmetrize(const LawvereSpace& x);

/// True iff f is short for the Lawvere metrics: dl_Y(f(x), f(x')) <= dl_X(x, x').
bool check_lawvere_morphism(const std::vector<int>& f, const LawvereSpace& x, const LawvereSpace& y);

/// Checks dl(x,y) = max_z (dl(x,z) - dl(y,z)); the maximum is attained at z = y.
bool yoneda_check(const LawvereSpace& x, int from, int to);

}  // namespace ordot
