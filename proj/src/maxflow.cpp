#include "ordot/maxflow.hpp"

#include <stdexcept>

namespace ordot {

MaxFlow::MaxFlow(int num_nodes) : n_(num_nodes), g_(num_nodes) {}

int MaxFlow::add_edge(int from, int to, Q capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  g_[from].push_back({to, static_cast<int>(g_[to].size()), capacity});
  g_[to].push_back({from, static_cast<int>(g_[from].size()) - 1, Q(0)});
  handles_.emplace_back(from, static_cast<int>(g_[from].size()) - 1);
  original_cap_.push_back(std::move(capacity));
  return static_cast<int>(handles_.size()) - 1;
}

Q MaxFlow::run(int s, int t) {
  source_ = s;
  std::vector<int> height(n_, 0);
  std::vector<Q> excess(n_, Q(0));
  std::vector<int> current(n_, 0);
  height[s] = n_;

  std::vector<std::vector<int>> bucket(2 * n_);
  std::vector<uint8_t> active(n_, 0);
  int highest = 0;
  auto activate = [&](int v) {
    if (v == s || v == t || active[v] || excess[v] == 0) return;
    active[v] = 1;
    bucket[height[v]].push_back(v);
    if (height[v] > highest) highest = height[v];
  };

  for (Arc& a : g_[s]) {
    if (a.cap == 0) continue;
    Q delta = a.cap;
    a.cap = 0;
    g_[a.to][a.rev].cap += delta;
    excess[a.to] += delta;
    excess[s] -= delta;
    activate(a.to);
  }

  while (highest >= 0) {
    if (bucket[highest].empty()) {
      --highest;
      continue;
    }
    const int v = bucket[highest].back();
    bucket[highest].pop_back();
    if (!active[v] || height[v] != highest) continue;  // stale entry
    active[v] = 0;
    // discharge v fully, relabeling in place as needed
    while (excess[v] > 0) {
      if (current[v] == static_cast<int>(g_[v].size())) {
        int best = 2 * n_;
        for (const Arc& a : g_[v])
          if (a.cap > 0 && height[a.to] + 1 < best) best = height[a.to] + 1;
        if (best == 2 * n_) throw internal_check_error("excess with no residual arc");
        height[v] = best;
        current[v] = 0;
        continue;
      }
      Arc& a = g_[v][current[v]];
      if (a.cap > 0 && height[v] == height[a.to] + 1) {
        const Q delta = q_min(excess[v], a.cap);
        a.cap -= delta;
        g_[a.to][a.rev].cap += delta;
        excess[v] -= delta;
        excess[a.to] += delta;
        activate(a.to);
      } else {
        ++current[v];
      }
    }
  }
  return excess[t];
}

Q MaxFlow::flow_on(int edge_handle) const {
  const auto& [node, pos] = handles_[edge_handle];
  return original_cap_[edge_handle] - g_[node][pos].cap;
}

std::vector<uint8_t> MaxFlow::min_cut_source_side() const {
  std::vector<uint8_t> seen(n_, 0);
  std::vector<int> queue{source_};
  seen[source_] = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (const Arc& a : g_[v])
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
  }
  return seen;
}

}  // namespace ordot
