#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ballsbins/core.hpp"

namespace ballsbins {

inline constexpr std::size_t kOracleMaxBalls = 16;
inline constexpr std::size_t kOracleMaxBins = 4;

struct OracleResult {
  Weight optimal_gap = 0.0;
  /// One optimal assignment: witness[b] holds the ball indices in bin b.
  std::vector<std::vector<std::size_t>> witness;
  /// Complete assignments evaluated after symmetry pruning.
  std::uint64_t instances_searched = 0;
};

/// Exhaustive minimum gap over every assignment of balls to `m` bins.
///
/// Bin relabelings are pruned by fixing ball 0 in bin 0 and opening bins in
/// index order. Among minimizers the witness is the lexicographically
/// smallest bin sequence. Throws InvalidInput("instance too large for
/// oracle") when n > 16 or m > 4.
OracleResult optimal_gap_bruteforce(const BallSet& balls, std::size_t m);

struct Verification {
  bool ok = true;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that `result` is a consistent allocation of `balls`: assignments
/// partition the ball indices, each load matches the re-summed weights of its
/// bin, and the gap matches the loads. Never throws for malformed results.
Verification verify_allocation(const AllocationResult& result, const BallSet& balls);

}  // namespace ballsbins
