#pragma once

#include <cstddef>
#include <vector>

#include "ballsbins/core.hpp"

namespace ballsbins {

/// A descending arrangement of a BallSet.
///
/// `weights[p]` is the weight at sorted position p and `order[p]` is the
/// original index of that ball. Equal weights keep ascending original index,
/// so every correct sorter yields the same SortedBalls for a given input.
struct SortedBalls {
  std::vector<Weight> weights;
  std::vector<std::size_t> order;

  bool operator==(const SortedBalls&) const = default;
};

/// Bucket sizing for the distribution sort: k = max(1, floor(ratio * n)).
struct BucketConfig {
  static constexpr double kDefaultRatio = 0.42;

  double ratio = kDefaultRatio;

  /// Throws InvalidInput unless ratio is in (0, 1].
  void validate() const;
  std::size_t bucket_count(std::size_t n) const;
};

/// Canonical descending sort by comparison (introsort over (weight, index)).
SortedBalls sort_descending_comparison(const BallSet& balls);

/// Flashsort-style descending sort.
///
/// Balls are classified into k buckets by the linear map
/// floor((k - 1) * (w - w_min) / (w_max - w_min)), using the observed range,
/// then each bucket is insertion-sorted and buckets are emitted from highest
/// to lowest. Average O(n) for evenly spread weights; O(n^2) when most
/// weights collapse into one bucket.
SortedBalls sort_descending_distribution(const BallSet& balls,
                                         const BucketConfig& cfg = {});

/// Bucket index of weight `w` for a range [w_min, w_max] and `k` buckets.
std::size_t classify_bucket(Weight w, Weight w_min, Weight w_max, std::size_t k) noexcept;

}  // namespace ballsbins
