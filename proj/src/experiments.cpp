#include "ballsbins/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "ballsbins/random.hpp"

namespace ballsbins {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw InvalidInput("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string format_bound(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Sink for timed results so the optimizer keeps the work.
volatile double g_sink = 0.0;

template <class Clock = std::chrono::steady_clock, class F>
double time_ns(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

std::size_t resolve_threads(std::size_t requested, std::size_t reps) {
  std::size_t t = requested;
  if (t == 0)
    t = std::max(1u, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(t, 1, reps);
}

template <class Body>
void for_each_rep(std::size_t reps, std::size_t threads, Body&& body) {
  if (threads <= 1) {
    for (std::size_t r = 0; r < reps; ++r)
      body(r);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&body, t, threads, reps] {
      for (std::size_t r = t; r < reps; r += threads)
        body(r);
    });
  }
}

void fill_gap_stats(ExperimentStats& stats, std::vector<double> gaps) {
  const Summary s = summarize(gaps);
  stats.mean_gap = s.mean;
  stats.sigma_gap = s.sigma;
  stats.min_gap = s.min;
  stats.max_gap = s.max;
  if (stats.config.keep_per_rep_gaps)
    stats.per_rep_gaps = std::move(gaps);
}

std::vector<ExperimentStats> sweep(std::span<const std::size_t> ns,
                                   std::span<const std::size_t> ms,
                                   const ExperimentConfig& base) {
  std::vector<ExperimentStats> rows;
  for (auto n : ns) {
    for (auto m : ms) {
      for (auto algorithm : {Algorithm::greedy, Algorithm::sorted_greedy}) {
        ExperimentConfig cfg = base;
        cfg.n = n;
        cfg.m = m;
        cfg.algorithm = algorithm;
        cfg.master_seed = point_seed(base.master_seed, n, m);
        rows.push_back(run_experiment(cfg));
      }
    }
  }
  return rows;
}

}  // namespace

void DistributionSpec::validate() const {
  if (!std::isfinite(lower) || !std::isfinite(upper))
    throw InvalidInput("distribution bounds must be finite");
  if (lower < 0.0)
    throw InvalidInput("distribution lower bound must be non-negative");
  if (!(upper > lower))
    throw InvalidInput("distribution upper bound must exceed lower bound");
}

std::string DistributionSpec::to_string() const {
  return "uniform:" + format_bound(lower) + ":" + format_bound(upper);
}

DistributionSpec DistributionSpec::parse(std::string_view text) {
  DistributionSpec spec;
  const auto first = text.find(':');
  const auto kind = text.substr(0, first);
  if (kind != "uniform")
    throw InvalidInput("unknown distribution '" + std::string(kind) + "'");
  if (first != std::string_view::npos) {
    const auto rest = text.substr(first + 1);
    const auto second = rest.find(':');
    if (second == std::string_view::npos)
      throw InvalidInput("expected uniform:LO:HI, got '" + std::string(text) + "'");
    spec.lower = parse_double(rest.substr(0, second), "lower bound");
    spec.upper = parse_double(rest.substr(second + 1), "upper bound");
  }
  spec.validate();
  return spec;
}

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::greedy:
      return "greedy";
    case Algorithm::sorted_greedy:
      return "sorted-greedy";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "greedy")
    return Algorithm::greedy;
  if (text == "sorted-greedy" || text == "sorted_greedy")
    return Algorithm::sorted_greedy;
  throw InvalidInput("unknown algorithm '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
  if (n == 0)
    throw InvalidInput("no balls");
  if (m < 2)
    throw InvalidInput("experiments need at least 2 bins");
  if (repetitions == 0)
    throw InvalidInput("repetitions must be positive");
  distribution.validate();
  if (sorter.kind == SorterKind::distribution)
    BucketConfig{sorter.bucket_ratio}.validate();
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty())
    return s;
  const auto count = static_cast<double>(values.size());
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / count;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values)
      ss += (v - s.mean) * (v - s.mean);
    s.sigma = std::sqrt(ss / (count - 1.0));
  }
  // Keep mean inside [min, max] despite rounding in the sum.
  s.mean = std::clamp(s.mean, s.min, s.max);

  std::vector<double> sorted(values.begin(), values.end());
  const std::size_t mid = sorted.size() / 2;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
  s.median = sorted[mid];
  if (sorted.size() % 2 == 0) {
    const double lower = *std::max_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid));
    s.median = 0.5 * (lower + s.median);
  }
  return s;
}

BallSet sample_uniform_weights(std::size_t n, const DistributionSpec& dist, std::uint64_t seed) {
  dist.validate();
  if (n == 0)
    throw InvalidInput("no balls");
  Xoshiro256StarStar rng(seed);
  const double width = dist.upper - dist.lower;
  std::vector<Weight> weights(n);
  for (auto& w : weights) {
    w = dist.lower + width * rng.next_unit();
    if (w >= dist.upper)
      w = std::nextafter(dist.upper, dist.lower);
  }
  return BallSet(std::move(weights));
}

std::uint64_t repetition_seed(std::uint64_t master_seed, std::size_t rep) noexcept {
  return stream_seed(master_seed, rep);
}

std::uint64_t point_seed(std::uint64_t master_seed, std::size_t n, std::size_t m) noexcept {
  // Offset the stream index so point seeds never coincide with repetition seeds.
  return stream_seed(stream_seed(master_seed ^ 0xA5A5A5A5A5A5A5A5ULL, n), m);
}

AllocationResult run_allocator(const BallSet& balls, std::size_t m, Algorithm algorithm,
                               const SorterChoice& sorter) {
  switch (algorithm) {
    case Algorithm::greedy:
      return greedy_allocate(balls, m);
    case Algorithm::sorted_greedy:
      return sorted_greedy_allocate(balls, m, sorter);
  }
  throw InvalidInput("unknown algorithm");
}

ExperimentStats run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t reps = cfg.repetitions;
  std::vector<double> gaps(reps, 0.0);
  std::vector<double> runtimes(cfg.measure_time ? reps : 0, 0.0);

  const std::size_t threads = cfg.measure_time ? 1 : resolve_threads(cfg.threads, reps);
  for_each_rep(reps, threads, [&](std::size_t r) {
    const BallSet balls =
        sample_uniform_weights(cfg.n, cfg.distribution, repetition_seed(cfg.master_seed, r));
    if (cfg.measure_time) {
      AllocationResult result;
      runtimes[r] = time_ns([&] { result = run_allocator(balls, cfg.m, cfg.algorithm, cfg.sorter); });
      gaps[r] = result.gap;
    } else {
      gaps[r] = run_allocator(balls, cfg.m, cfg.algorithm, cfg.sorter).gap;
    }
  });

  ExperimentStats stats;
  stats.config = cfg;
  fill_gap_stats(stats, std::move(gaps));
  if (cfg.measure_time) {
    const Summary t = summarize(runtimes);
    stats.mean_runtime_ns = t.mean;
    stats.median_runtime_ns = t.median;
  }
  return stats;
}

std::vector<ExperimentStats> sweep_n(std::span<const std::size_t> ns,
                                     const ExperimentConfig& base) {
  for (auto n : ns) {
    if (n == 0)
      throw InvalidInput("no balls");
  }
  const std::size_t m[] = {base.m};
  return sweep(ns, m, base);
}

std::vector<ExperimentStats> sweep_m(std::span<const std::size_t> ms,
                                     const ExperimentConfig& base) {
  for (auto m : ms) {
    if (m < 2)
      throw InvalidInput("experiments need at least 2 bins");
    if (m > base.n)
      throw InvalidInput("m-sweep needs m <= n, got m = " + std::to_string(m) +
                         " with n = " + std::to_string(base.n));
  }
  const std::size_t n[] = {base.n};
  return sweep(n, ms, base);
}

std::vector<std::size_t> default_sweep_ns() {
  std::vector<std::size_t> ns;
  for (std::size_t n = 32; n <= 8192; n *= 2)
    ns.push_back(n);
  ns.insert(std::upper_bound(ns.begin(), ns.end(), std::size_t{3027}), 3027);
  return ns;
}

std::vector<std::size_t> default_sweep_ms() { return {2, 4, 8, 16, 32}; }

TimingReport timing_benchmark(std::size_t n, std::size_t m, std::size_t reps,
                              const TimingOptions& options) {
  if (n == 0)
    throw InvalidInput("no balls");
  if (m == 0)
    throw InvalidInput("no bins");
  if (reps == 0)
    throw InvalidInput("repetitions must be positive");
  options.distribution.validate();

  TimingReport report;
  report.n = n;
  report.m = m;
  report.repetitions = reps;
  report.options = options;

  double sink = 0.0;
  for (std::size_t w = 0; w < options.warmup; ++w) {
    const BallSet balls =
        sample_uniform_weights(n, options.distribution, repetition_seed(~options.seed, w));
    sink += greedy_allocate(balls, m).gap;
    sink += sorted_greedy_allocate(balls, m, options.sorter).gap;
  }

  std::vector<double> greedy_ns(reps), sorted_ns(reps), sort_ns(reps);
  std::vector<double> greedy_gaps(reps), sorted_gaps(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const BallSet balls =
        sample_uniform_weights(n, options.distribution, repetition_seed(options.seed, r));
    AllocationResult plain;
    AllocationResult sorted;
    greedy_ns[r] = time_ns([&] { plain = greedy_allocate(balls, m); });
    sorted_ns[r] = time_ns([&] { sorted = sorted_greedy_allocate(balls, m, options.sorter); });
    SortedBalls order;
    sort_ns[r] = time_ns([&] { order = sort_descending(balls, options.sorter); });
    sink += static_cast<double>(order.order.front());
    greedy_gaps[r] = plain.gap;
    sorted_gaps[r] = sorted.gap;
  }
  g_sink = sink;

  const Summary g = summarize(greedy_ns);
  const Summary s = summarize(sorted_ns);
  const Summary p = summarize(sort_ns);
  report.mean_total_greedy_ns = g.mean;
  report.mean_total_sorted_ns = s.mean;
  report.mean_sort_phase_ns = p.mean;
  report.median_total_greedy_ns = g.median;
  report.median_total_sorted_ns = s.median;
  report.median_sort_phase_ns = p.median;
  report.overhead_fraction = s.mean > 0.0 ? (s.mean - g.mean) / s.mean : 0.0;

  auto make_stats = [&](Algorithm algorithm, std::vector<double> gaps, const Summary& t) {
    ExperimentStats stats;
    stats.config.n = n;
    stats.config.m = m;
    stats.config.repetitions = reps;
    stats.config.master_seed = options.seed;
    stats.config.distribution = options.distribution;
    stats.config.algorithm = algorithm;
    stats.config.sorter = options.sorter;
    stats.config.measure_time = true;
    fill_gap_stats(stats, std::move(gaps));
    stats.mean_runtime_ns = t.mean;
    stats.median_runtime_ns = t.median;
    return stats;
  };
  report.greedy = make_stats(Algorithm::greedy, std::move(greedy_gaps), g);
  report.sorted = make_stats(Algorithm::sorted_greedy, std::move(sorted_gaps), s);
  return report;
}

}  // namespace ballsbins
