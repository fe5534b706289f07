// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
// Statistical criteria use master seed 42 (the CLI default).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ballsbins/allocators.hpp"
#include "ballsbins/cli.hpp"
#include "ballsbins/experiments.hpp"
#include "ballsbins/oracle.hpp"

using namespace ballsbins;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kReps = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

const ExperimentStats& row(const std::vector<ExperimentStats>& rows, Algorithm a, std::size_t n,
                           std::size_t m) {
  for (const auto& r : rows)
    if (r.config.algorithm == a && r.config.n == n && r.config.m == m)
      return r;
  throw std::logic_error("missing row");
}

double ratio(const std::vector<ExperimentStats>& rows, std::size_t n, std::size_t m) {
  return row(rows, Algorithm::greedy, n, m).mean_gap /
         row(rows, Algorithm::sorted_greedy, n, m).mean_gap;
}

ExperimentConfig base_config(std::size_t m) {
  ExperimentConfig cfg;
  cfg.m = m;
  cfg.repetitions = kReps;
  cfg.master_seed = kSeed;
  cfg.distribution = DistributionSpec{DistributionKind::uniform, 0.0, 10.0};
  return cfg;
}

// Shared sweep tables, computed once.
const std::vector<ExperimentStats>& fig1_m2() {
  static const auto rows = [] {
    const std::vector<std::size_t> ns{64, 256, 512, 1024, 2048, 4096, 8192};
    return sweep_n(ns, base_config(2));
  }();
  return rows;
}

const std::vector<ExperimentStats>& fig1_m8() {
  static const auto rows = [] {
    const std::vector<std::size_t> ns{512, 1024, 2048, 4096};
    return sweep_n(ns, base_config(8));
  }();
  return rows;
}

Outcome hand_traces() {
  const BallSet a{1, 1, 2, 3, 4, 5};
  const auto g = greedy_allocate(a, 2);
  const auto s = sorted_greedy_allocate(a, 2);
  const auto t = sorted_greedy_allocate(BallSet{4, 3, 3, 2, 2, 2}, 3);
  const bool ok = g.loads == std::vector<Weight>{7, 9} && g.gap == 2.0 &&
                  s.loads == std::vector<Weight>{8, 8} && s.gap == 0.0 && t.gap == 1.0;
  return {ok, "greedy gap " + fmt(g.gap) + ", sorted gap " + fmt(s.gap) + ", m=3 sorted gap " +
                  fmt(t.gap)};
}

Outcome oracle_dominance() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 pick(kSeed);
  std::uniform_int_distribution<std::size_t> n_dist(1, 12);
  std::uniform_int_distribution<std::size_t> m_dist(2, 3);
  int violations = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = n_dist(pick);
    const std::size_t m = m_dist(pick);
    const BallSet balls = sample_uniform_weights(n, {}, repetition_seed(kSeed, i));
    const double tol = load_tolerance(balls.total());
    const double best = optimal_gap_bruteforce(balls, m).optimal_gap;
    if (best > sorted_greedy_allocate(balls, m).gap + tol || best > greedy_allocate(balls, m).gap + tol)
      ++violations;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {violations == 0 && secs < 60.0,
          std::to_string(violations) + " violations in 200 instances, " + fmt(secs) + " s"};
}

Outcome gap_ratio_fig1() {
  bool ok = true;
  std::string detail;
  for (std::size_t m : {2, 8}) {
    const auto& rows = m == 2 ? fig1_m2() : fig1_m8();
    detail += "m=" + std::to_string(m) + ":";
    for (std::size_t n : {512, 1024, 2048, 4096}) {
      const double r = ratio(rows, n, m);
      ok = ok && r >= 10.0;
      detail += " " + fmt(r);
    }
    detail += "  ";
  }
  return {ok, detail + "(need >= 10)"};
}

Outcome two_orders() {
  const double r = ratio(fig1_m2(), 8192, 2);
  return {r >= 50.0, "ratio at n=8192, m=2: " + fmt(r) + " (need >= 50)"};
}

Outcome exponential_decay() {
  const std::size_t ns[] = {64, 256, 1024, 4096};
  bool ok = true;
  double prev = INFINITY;
  std::string detail;
  for (auto n : ns) {
    const double g = row(fig1_m2(), Algorithm::sorted_greedy, n, 2).mean_gap;
    ok = ok && g < prev;
    prev = g;
    detail += "n=" + std::to_string(n) + ":" + fmt(g) + " ";
  }
  const double first = row(fig1_m2(), Algorithm::sorted_greedy, 64, 2).mean_gap;
  ok = ok && prev < first / 10.0;
  return {ok, detail};
}

Outcome greedy_constancy() {
  const std::size_t ns[] = {64, 256, 1024, 4096};
  std::vector<double> gaps;
  std::string detail;
  for (auto n : ns) {
    const auto& r = row(fig1_m2(), Algorithm::greedy, n, 2);
    gaps.push_back(r.mean_gap);
    detail += "n=" + std::to_string(n) + ":" + fmt(r.mean_gap) + " (sigma " + fmt(r.sigma_gap) + ") ";
  }
  const double median = summarize(gaps).median;
  bool ok = true;
  for (double g : gaps)
    ok = ok && std::abs(g - median) <= 0.25 * median;
  return {ok, detail + "median " + fmt(median) + "; reference sigma 0.23"};
}

Outcome m_sweep_shape() {
  const std::vector<std::size_t> ms{2, 4, 8, 16, 32};
  bool ok = true;
  std::string detail;
  for (std::size_t n : {1024, 3027}) {
    auto cfg = base_config(2);
    cfg.n = n;
    const auto rows = sweep_m(ms, cfg);
    for (auto m : ms)
      ok = ok && row(rows, Algorithm::greedy, n, m).mean_gap >
                     row(rows, Algorithm::sorted_greedy, n, m).mean_gap;
    const double g2 = row(rows, Algorithm::greedy, n, 2).mean_gap;
    const double g32 = row(rows, Algorithm::greedy, n, 32).mean_gap;
    ok = ok && g32 > g2;
    detail += "n=" + std::to_string(n) + " greedy m=2:" + fmt(g2) + " m=32:" + fmt(g32) +
              " sorted m=32:" + fmt(row(rows, Algorithm::sorted_greedy, n, 32).mean_gap) + "  ";
  }
  return {ok, detail};
}

Outcome sorter_equivalence() {
  std::mt19937_64 pick(kSeed);
  std::uniform_int_distribution<std::size_t> n_dist(1, 4096);
  std::uniform_int_distribution<std::size_t> m_dist(2, 32);
  int mismatches = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = n_dist(pick);
    const std::size_t m = m_dist(pick);
    BallSet balls = sample_uniform_weights(n, {}, repetition_seed(kSeed + 1, i));
    if (i % 4 == 0) {
      // Coarse weights force many ties.
      std::vector<Weight> w(balls.begin(), balls.end());
      for (auto& x : w)
        x = std::floor(x);
      balls = BallSet(std::move(w));
    }
    const auto a = sort_descending_comparison(balls);
    const auto b = sort_descending_distribution(balls);
    const auto ga = sorted_greedy_allocate(balls, m, {SorterKind::comparison, 0.42});
    const auto gb = sorted_greedy_allocate(balls, m, {SorterKind::distribution, 0.42});
    if (!(a == b) || ga.gap != gb.gap || ga.loads != gb.loads)
      ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches in 1000 instances"};
}

Outcome sorting_properties() {
  std::mt19937_64 pick(kSeed);
  std::uniform_int_distribution<std::size_t> n_dist(1, 512);
  int bad = 0;
  const std::size_t cases = 10000;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = n_dist(pick);
    const BallSet balls = sample_uniform_weights(n, {}, repetition_seed(kSeed + 2, i));
    for (const auto& out : {sort_descending_comparison(balls), sort_descending_distribution(balls)}) {
      std::vector<bool> seen(n, false);
      bool ok = out.order.size() == n && out.weights.size() == n;
      for (std::size_t p = 0; ok && p < n; ++p) {
        ok = out.order[p] < n && !seen[out.order[p]] && out.weights[p] == balls[out.order[p]] &&
             (p + 1 == n || out.weights[p] >= out.weights[p + 1]);
        if (ok)
          seen[out.order[p]] = true;
      }
      bad += ok ? 0 : 1;
    }
    const auto k = BucketConfig{}.bucket_count(n);
    if (k != std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(0.42 * static_cast<double>(n)))))
      ++bad;
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"};
}

Outcome timing_overhead() {
  const auto cmp = timing_benchmark(8192, 2, 100);
  TimingOptions dist_opts;
  dist_opts.sorter.kind = SorterKind::distribution;
  const auto dist = timing_benchmark(8192, 2, 100, dist_opts);
  return {cmp.overhead_fraction < 0.10,
          "overhead_fraction " + fmt(cmp.overhead_fraction) + " (comparison), " +
              fmt(dist.overhead_fraction) + " (distribution); greedy " +
              fmt(cmp.mean_total_greedy_ns / 1e3) + " us, sorted " +
              fmt(cmp.mean_total_sorted_ns / 1e3) + " us (need < 0.10)"};
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ballsbins");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"run", "--n", "1024", "--m", "8", "--reps", "300", "--seed", "7"},
      {"sweep-n", "--ns", "32,512,3027", "--m", "2", "--reps", "300"},
      {"sweep-m", "--n", "1024", "--ms", "2,8,32", "--reps", "200", "--sorter", "distribution"},
  };
  int differing = 0;
  for (const auto& c : commands) {
    const auto first = run_cli(c);
    if (first.rfind("0\n", 0) != 0 || first != run_cli(c))
      ++differing;
  }
  return {differing == 0, std::to_string(commands.size()) + " commands, " +
                              std::to_string(differing) + " differing or failing"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"1 hand-trace fixtures", hand_traces},
      {"2 oracle dominance", oracle_dominance},
      {"3 gap ratio >= 10 (m=2, m=8)", gap_ratio_fig1},
      {"4 two orders of magnitude (ratio >= 50 at n=8192)", two_orders},
      {"5 sorted-greedy gap decays with n", exponential_decay},
      {"6 greedy gap roughly constant in n", greedy_constancy},
      {"7 m-sweep shape", m_sweep_shape},
      {"8 sorter equivalence", sorter_equivalence},
      {"9 sorting properties", sorting_properties},
      {"10 sorting overhead < 0.10", timing_overhead},
      {"11 byte-identical CSV", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
