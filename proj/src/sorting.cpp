#include "ballsbins/sorting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace ballsbins {

void BucketConfig::validate() const {
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw InvalidInput("bucket ratio must be in (0, 1]");
}

std::size_t BucketConfig::bucket_count(std::size_t n) const {
  validate();
  const auto k = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
  return std::max<std::size_t>(1, k);
}

std::size_t classify_bucket(Weight w, Weight w_min, Weight w_max, std::size_t k) noexcept {
  if (!(w_max > w_min) || k <= 1)
    return 0;
  // The fraction is exactly 1 at w_max, so the top weight always lands in k - 1.
  const double scaled = (w - w_min) / (w_max - w_min) * static_cast<double>(k - 1);
  const auto b = static_cast<std::size_t>(std::floor(scaled));
  return std::min(b, k - 1);
}

SortedBalls sort_descending_comparison(const BallSet& balls) {
  // Sort (weight, index) pairs by value; indirect comparisons thrash the cache.
  std::vector<std::pair<Weight, std::size_t>> keyed(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i)
    keyed[i] = {balls[i], i};
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first > b.first;
    return a.second < b.second;
  });
  SortedBalls out;
  out.weights.resize(keyed.size());
  out.order.resize(keyed.size());
  for (std::size_t p = 0; p < keyed.size(); ++p) {
    out.weights[p] = keyed[p].first;
    out.order[p] = keyed[p].second;
  }
  return out;
}

SortedBalls sort_descending_distribution(const BallSet& balls, const BucketConfig& cfg) {
  const std::size_t n = balls.size();
  const std::size_t k = cfg.bucket_count(n);
  const auto [lo, hi] = std::minmax_element(balls.begin(), balls.end());
  const Weight w_min = *lo;
  const Weight w_max = *hi;

  std::vector<std::size_t> bucket_of(n);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bucket_of[i] = classify_bucket(balls[i], w_min, w_max, k);
    ++counts[bucket_of[i]];
  }

  // Start offsets laid out from the top bucket down.
  std::vector<std::size_t> start(k + 1, 0);
  {
    std::size_t offset = 0;
    for (std::size_t b = k; b-- > 0;) {
      start[b] = offset;
      offset += counts[b];
    }
  }

  // Scatter in ascending index order, so each bucket starts index-sorted.
  SortedBalls out;
  out.weights.resize(n);
  out.order.resize(n);
  {
    std::vector<std::size_t> cursor(start.begin(), start.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t slot = cursor[bucket_of[i]]++;
      out.weights[slot] = balls[i];
      out.order[slot] = i;
    }
  }

  // Stable insertion sort per bucket keeps equal weights in index order.
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t first = start[b];
    const std::size_t last = first + counts[b];
    for (std::size_t i = first + 1; i < last; ++i) {
      const Weight w = out.weights[i];
      const std::size_t idx = out.order[i];
      std::size_t j = i;
      while (j > first && out.weights[j - 1] < w) {
        out.weights[j] = out.weights[j - 1];
        out.order[j] = out.order[j - 1];
        --j;
      }
      out.weights[j] = w;
      out.order[j] = idx;
    }
  }
  return out;
}

}  // namespace ballsbins
