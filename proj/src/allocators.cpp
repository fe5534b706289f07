#include "ballsbins/allocators.hpp"

#include <string>
#include <utility>

namespace ballsbins {

namespace {

// Places ball visit(0), visit(1), ... (each an (index, weight) pair): the
// first seeds bin 0, every later one goes to the lightest bin.
template <class Visit>
AllocationResult place_in_order(const BallSet& balls, std::size_t m, Visit&& visit) {
  if (m == 0)
    throw InvalidInput("no bins");
  const std::size_t n = balls.size();

  AllocationResult result;
  result.loads.assign(m, 0.0);
  result.assignments.resize(m);
  for (auto& bin : result.assignments)
    bin.reserve(n / m + 1);

  const auto [first, first_weight] = visit(0);
  result.loads[0] = first_weight;
  result.assignments[0].push_back(first);

  for (std::size_t step = 1; step < n; ++step) {
    const auto [ball, weight] = visit(step);
    const std::size_t bin = find_lightest_bin(result.loads);
    result.loads[bin] += weight;
    result.assignments[bin].push_back(ball);
  }

  result.total_weight = balls.total();
  result.ideal_load = result.total_weight / static_cast<Weight>(m);
  result.gap = gap(result.loads);
  return result;
}

}  // namespace

std::string_view to_string(SorterKind kind) noexcept {
  switch (kind) {
    case SorterKind::comparison:
      return "comparison";
    case SorterKind::distribution:
      return "distribution";
  }
  return "unknown";
}

SorterKind parse_sorter_kind(std::string_view text) {
  if (text == "comparison")
    return SorterKind::comparison;
  if (text == "distribution")
    return SorterKind::distribution;
  throw InvalidInput("unknown sorter '" + std::string(text) + "'");
}

std::size_t find_lightest_bin(std::span<const Weight> loads) {
  if (loads.empty())
    throw InvalidInput("no bins");
  std::size_t best = 0;
  for (std::size_t i = 1; i < loads.size(); ++i) {
    if (loads[i] < loads[best])
      best = i;
  }
  return best;
}

AllocationResult greedy_allocate(const BallSet& balls, std::size_t m) {
  return place_in_order(balls, m, [&balls](std::size_t step) {
    return std::pair{step, balls[step]};
  });
}

SortedBalls sort_descending(const BallSet& balls, const SorterChoice& sorter) {
  switch (sorter.kind) {
    case SorterKind::comparison:
      return sort_descending_comparison(balls);
    case SorterKind::distribution:
      return sort_descending_distribution(balls, BucketConfig{sorter.bucket_ratio});
  }
  throw InvalidInput("unknown sorter");
}

AllocationResult place_sorted(const BallSet& balls, const SortedBalls& sorted,
                              std::size_t m) {
  if (sorted.order.size() != balls.size())
    throw InvalidInput("sorted order does not match ball count");
  return place_in_order(balls, m, [&sorted](std::size_t step) {
    return std::pair{sorted.order[step], sorted.weights[step]};
  });
}

AllocationResult sorted_greedy_allocate(const BallSet& balls, std::size_t m,
                                        const SorterChoice& sorter) {
  if (m == 0)
    throw InvalidInput("no bins");
  return place_sorted(balls, sort_descending(balls, sorter), m);
}

}  // namespace ballsbins
