#pragma once

#include <vector>

#include "ordot/numeric.hpp"

namespace ordot {

/// Exact-rational max flow via highest-label push-relabel.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  /// Adds a directed edge, returns its handle for flow_on().
  int add_edge(int from, int to, Q capacity);

  /// Computes the maximum s-t flow value. Call once.
  Q run(int s, int t);

  /// Flow pushed along an edge added with add_edge (after run()).
  Q flow_on(int edge_handle) const;

  /// Source side of a minimum cut: residual reachability from s (after run()).
  std::vector<uint8_t> min_cut_source_side() const;

 private:
  struct Arc {
    int to;
    int rev;
    Q cap;
  };
  int n_;
  int source_ = -1;
  std::vector<std::vector<Arc>> g_;
  std::vector<std::pair<int, int>> handles_;  // (node, arc position)
  std::vector<Q> original_cap_;
};

}  // namespace ordot
