#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ballsbins/allocators.hpp"
#include "ballsbins/core.hpp"

namespace ballsbins {

enum class DistributionKind { uniform };

/// Weight distribution: uniform on [lower, upper).
struct DistributionSpec {
  DistributionKind kind = DistributionKind::uniform;
  double lower = 0.0;
  double upper = 10.0;

  /// Throws InvalidInput unless 0 <= lower < upper, both finite.
  void validate() const;
  /// Canonical text form, e.g. "uniform:0:10".
  std::string to_string() const;
  /// Parses "uniform:LO:HI" (or bare "uniform" for [0, 10)).
  static DistributionSpec parse(std::string_view text);
};

enum class Algorithm { greedy, sorted_greedy };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts "greedy" and "sorted-greedy" (also "sorted_greedy").
Algorithm parse_algorithm(std::string_view text);

struct ExperimentConfig {
  std::size_t n = 1;
  std::size_t m = 2;
  std::size_t repetitions = 1000;
  std::uint64_t master_seed = 42;
  DistributionSpec distribution;
  Algorithm algorithm = Algorithm::sorted_greedy;
  SorterChoice sorter;
  bool keep_per_rep_gaps = false;
  /// Record per-repetition allocation wall time. Forces sequential execution.
  bool measure_time = false;
  /// Worker threads for repetitions; 0 picks hardware concurrency.
  std::size_t threads = 0;

  /// Throws InvalidInput for n = 0, m < 2, repetitions = 0, or a bad
  /// distribution or bucket ratio.
  void validate() const;
};

struct ExperimentStats {
  ExperimentConfig config;
  double mean_gap = 0.0;
  /// Sample standard deviation (divisor repetitions - 1; 0 for one repetition).
  double sigma_gap = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
  std::vector<double> per_rep_gaps;
  /// Zero unless config.measure_time.
  double mean_runtime_ns = 0.0;
  double median_runtime_ns = 0.0;
};

/// Summary statistics over values in index order.
struct Summary {
  double mean = 0.0;
  double sigma = 0.0;
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
};
Summary summarize(std::span<const double> values);

/// `n` independent uniform draws in [lower, upper) from xoshiro256** seeded
/// with `seed`. Bit-identical on every platform.
BallSet sample_uniform_weights(std::size_t n, const DistributionSpec& dist, std::uint64_t seed);

/// Seed of repetition `rep` (0-based) under `master_seed`.
std::uint64_t repetition_seed(std::uint64_t master_seed, std::size_t rep) noexcept;

/// Seed used for one (n, m) point of a sweep. Both algorithms at a point
/// share it, so they see the same weight sets.
std::uint64_t point_seed(std::uint64_t master_seed, std::size_t n, std::size_t m) noexcept;

/// Runs one allocation with the configured algorithm.
AllocationResult run_allocator(const BallSet& balls, std::size_t m, Algorithm algorithm,
                               const SorterChoice& sorter);

/// Repeats: sample weights with repetition_seed(master, r), allocate, record
/// the gap. Aggregation is in repetition order regardless of thread count.
ExperimentStats run_experiment(const ExperimentConfig& cfg);

/// Both algorithms at every n (base.m fixed). Rows ordered by n as given,
/// greedy before sorted-greedy; each row's config carries its point seed.
std::vector<ExperimentStats> sweep_n(std::span<const std::size_t> ns,
                                     const ExperimentConfig& base);

/// Both algorithms at every m (base.n fixed). Requires 2 <= m <= n.
std::vector<ExperimentStats> sweep_m(std::span<const std::size_t> ms,
                                     const ExperimentConfig& base);

/// Default n values for the n-sweep: powers of two 32..8192 plus 3027.
std::vector<std::size_t> default_sweep_ns();
/// Default m values for the m-sweep: 2, 4, 8, 16, 32.
std::vector<std::size_t> default_sweep_ms();

struct TimingOptions {
  std::uint64_t seed = 42;
  DistributionSpec distribution;
  SorterChoice sorter;
  std::size_t warmup = 5;
};

struct TimingReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t repetitions = 0;
  TimingOptions options;
  double mean_total_greedy_ns = 0.0;
  double mean_total_sorted_ns = 0.0;
  double mean_sort_phase_ns = 0.0;
  double median_total_greedy_ns = 0.0;
  double median_total_sorted_ns = 0.0;
  double median_sort_phase_ns = 0.0;
  /// (sorted_total - greedy_total) / sorted_total over the means.
  double overhead_fraction = 0.0;
  /// Gap and runtime statistics of the timed runs, for CSV output.
  ExperimentStats greedy;
  ExperimentStats sorted;
};

/// Times Greedy[m] and SortedGreedy[m] on the same fresh weight set per
/// repetition, single-threaded. Weight sampling is outside the timed region;
/// the sort phase is additionally timed on its own. `warmup` untimed rounds
/// run first.
TimingReport timing_benchmark(std::size_t n, std::size_t m, std::size_t reps,
                              const TimingOptions& options = {});

}  // namespace ballsbins
