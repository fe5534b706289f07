#include "ballsbins/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ballsbins {

BallSet::BallSet(std::vector<Weight> weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw InvalidInput("no balls");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const Weight w = weights_[i];
    if (!std::isfinite(w))
      throw InvalidInput("ball " + std::to_string(i) + ": weight is not finite");
    if (w < 0.0)
      throw InvalidInput("ball " + std::to_string(i) + ": weight is negative");
  }
}

BallSet::BallSet(std::initializer_list<Weight> weights)
    : BallSet(std::vector<Weight>(weights)) {}

Weight BallSet::total() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

Weight BallSet::max_weight() const noexcept {
  return *std::max_element(weights_.begin(), weights_.end());
}

Weight gap(std::span<const Weight> loads) {
  if (loads.empty())
    throw InvalidInput("no bins");
  const auto [lo, hi] = std::minmax_element(loads.begin(), loads.end());
  return *hi - *lo;
}

Weight ideal_load(const BallSet& balls, std::size_t m) {
  if (m == 0)
    throw InvalidInput("no bins");
  return balls.total() / static_cast<Weight>(m);
}

double load_tolerance(Weight total) noexcept {
  return 1e-9 * std::max(1.0, total);
}

}  // namespace ballsbins
