#include "telemelody/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "telemelody/errors.hpp"

namespace telemelody {

int sample_categorical(const std::vector<double>& weights,
                       const SamplerConfig& cfg, RandomSource& rng) {
  const int n = static_cast<int>(weights.size());
  if (std::none_of(weights.begin(), weights.end(),
                   [](double w) { return w > 0; }))
    throw AllZeroWeights("no positive weight to sample from");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] > weights[b];  // stable: weight ties keep lower index
  });
  const int kept = std::min(std::max(1, cfg.top_k), n);

  std::vector<double> powered(kept);
  double total = 0;
  for (int i = 0; i < kept; ++i) {
    const double w = weights[order[i]];
    powered[i] = w > 0 ? std::pow(w, 1.0 / cfg.temperature) : 0.0;
    total += powered[i];
  }

  const double u = rng.next_double() * total;
  double acc = 0;
  for (int i = 0; i < kept; ++i) {
    acc += powered[i];
    if (u < acc) return order[i];
  }
  // Rounding can leave u == total; return the last kept positive weight.
  for (int i = kept - 1; i >= 0; --i)
    if (powered[i] > 0) return order[i];
  return order[0];
}

}  // namespace telemelody
