#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "ballsbins/core.hpp"
#include "ballsbins/sorting.hpp"

namespace ballsbins {

enum class SorterKind { comparison, distribution };

struct SorterChoice {
  SorterKind kind = SorterKind::comparison;
  /// Only read for SorterKind::distribution.
  double bucket_ratio = BucketConfig::kDefaultRatio;
};

std::string_view to_string(SorterKind kind) noexcept;
/// Accepts "comparison" or "distribution"; throws InvalidInput otherwise.
SorterKind parse_sorter_kind(std::string_view text);

/// Index of a bin with minimal load. Ties go to the lowest index.
std::size_t find_lightest_bin(std::span<const Weight> loads);

/// Greedy[m]: balls in input order, the first into bin 0, each later one
/// into the currently lightest bin.
AllocationResult greedy_allocate(const BallSet& balls, std::size_t m);

/// SortedGreedy[m]: canonical descending sort, then Greedy[m] on the sorted
/// sequence. Assignments still refer to the caller's ball indices.
AllocationResult sorted_greedy_allocate(const BallSet& balls, std::size_t m,
                                        const SorterChoice& sorter = {});

/// Descending sort with the chosen strategy.
SortedBalls sort_descending(const BallSet& balls, const SorterChoice& sorter);

/// Greedy placement of an already-sorted sequence. This is the placement
/// phase of sorted_greedy_allocate, exposed separately for phase timing.
AllocationResult place_sorted(const BallSet& balls, const SortedBalls& sorted,
                              std::size_t m);

}  // namespace ballsbins
