#include "ordot/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ordot {

Q Measure::at(int point) const {
  for (const auto& [i, w] : weights)
    if (i == point) return w;
  return Q(0);
}

Measure make_measure(SpacePtr base, std::vector<std::pair<int, Q>> raw) {
  if (!base) throw std::invalid_argument("measure needs a base space");
  std::map<int, Q> merged;
  for (auto& [i, w] : raw) {
    if (i < 0 || i >= base->size()) throw std::invalid_argument("weight on unknown point");
    if (w < 0) throw std::invalid_argument("negative weight");
    if (w == 0) continue;  // zero-weight atoms are stripped
    merged[i] += w;
  }
  Q sum = 0;
  for (const auto& [i, w] : merged) sum += w;
  if (sum != 1) {
    if (base->mode.exact || !base->mode.eq(sum, 1))
      throw std::invalid_argument("weights must sum to 1 (got " + q_str(sum) + ")");
    for (auto& [i, w] : merged) w /= sum;
  }
  Measure m;
  m.base = std::move(base);
  m.weights.assign(merged.begin(), merged.end());
  if (m.weights.empty()) throw std::invalid_argument("empty measure");
  return m;
}

Measure dirac(SpacePtr base, int x) { return make_measure(std::move(base), {{x, Q(1)}}); }

Measure empirical(SpacePtr base, const Tuple& t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  const Q unit(1, static_cast<unsigned long>(t.size()));
  std::vector<std::pair<int, Q>> raw;
  raw.reserve(t.size());
  for (int x : t) raw.emplace_back(x, unit);
  return make_measure(std::move(base), std::move(raw));
}

Measure pushforward(const std::vector<int>& f, const Measure& p, SpacePtr target) {
  std::vector<std::pair<int, Q>> raw;
  raw.reserve(p.weights.size());
  for (const auto& [i, w] : p.weights) {
    if (i >= static_cast<int>(f.size()) || f[i] < 0)
      throw std::invalid_argument("map not defined on the support");
    raw.emplace_back(f[i], w);
  }
  return make_measure(std::move(target), std::move(raw));
}

NestedMeasure make_nested(std::vector<Measure> inner, std::vector<Q> outer) {
  if (inner.empty() || inner.size() != outer.size())
    throw std::invalid_argument("nested measure shape mismatch");
  for (const auto& m : inner)
    if (m.base != inner[0].base)
      throw std::invalid_argument("inner measures must share a base space");
  Q sum = 0;
  for (const Q& w : outer) {
    if (w <= 0) throw std::invalid_argument("outer weights must be positive");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("outer weights must sum to 1");
  return {std::move(inner), std::move(outer)};
}

Measure expectation(const NestedMeasure& mu) {
  std::vector<std::pair<int, Q>> raw;
  for (std::size_t k = 0; k < mu.inner.size(); ++k)
    for (const auto& [i, w] : mu.inner[k].weights) raw.emplace_back(i, mu.outer[k] * w);
  return make_measure(mu.inner[0].base, std::move(raw));
}

Measure product_measure(const Measure& p, const Measure& q, SpacePtr xy) {
  const int ny = q.base->size();
  if (!xy || xy->size() != p.base->size() * ny)
    throw std::invalid_argument("tensor space size mismatch");
  std::vector<std::pair<int, Q>> raw;
  raw.reserve(p.weights.size() * q.weights.size());
  for (const auto& [i, wi] : p.weights)
    for (const auto& [j, wj] : q.weights) raw.emplace_back(i * ny + j, wi * wj);
  return make_measure(std::move(xy), std::move(raw));
}

std::pair<Measure, Measure> marginals(const Measure& r, SpacePtr x, SpacePtr y) {
  const int ny = y->size();
  if (r.base->size() != x->size() * ny) throw std::invalid_argument("tensor space size mismatch");
  std::vector<std::pair<int, Q>> rx, ry;
  for (const auto& [ij, w] : r.weights) {
    rx.emplace_back(ij / ny, w);
    ry.emplace_back(ij % ny, w);
  }
  return {make_measure(std::move(x), std::move(rx)), make_measure(std::move(y), std::move(ry))};
}

bool same_measure(const Measure& a, const Measure& b) {
  return a.base == b.base && a.weights == b.weights;
}

Q integrate(const Measure& p, const std::vector<Q>& f) {
  if (static_cast<int>(f.size()) != p.base->size())
    throw std::invalid_argument("function table size mismatch");
  Q sum = 0;
  for (const auto& [i, w] : p.weights) sum += f[i] * w;
  return sum;
}

}  // namespace ordot
