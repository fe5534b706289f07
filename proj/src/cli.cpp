#include "ballsbins/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballsbins/allocators.hpp"
#include "ballsbins/experiments.hpp"
#include "ballsbins/io.hpp"
#include "ballsbins/oracle.hpp"

namespace ballsbins::cli {

namespace {

// Flags shared by the experiment-style subcommands.
struct ExperimentFlags {
  std::size_t reps = 1000;
  std::uint64_t seed = 42;
  std::string dist = "uniform:0:10";
  std::string sorter = "comparison";
  double bucket_ratio = BucketConfig::kDefaultRatio;
  std::string output = "-";
  std::string format = "csv";
  bool timing = false;
  std::size_t threads = 0;

  void add_to(CLI::App& app, bool with_reps = true) {
    if (with_reps)
      app.add_option("--reps", reps, "Repetitions per parameter point")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--dist", dist, "Weight distribution, uniform:LO:HI");
    app.add_option("--sorter", sorter, "Sort strategy for sorted-greedy")
        ->check(CLI::IsMember({"comparison", "distribution"}));
    app.add_option("--bucket-ratio", bucket_ratio, "Buckets per ball for the distribution sorter");
    app.add_option("--output", output, "Output path, '-' for stdout");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  void add_run_flags(CLI::App& app) {
    app.add_flag("--timing", timing, "Record mean allocation time (CSV is then not reproducible)");
    app.add_option("--threads", threads, "Worker threads, 0 = all cores");
  }

  SorterChoice sorter_choice() const {
    SorterChoice choice{parse_sorter_kind(sorter), bucket_ratio};
    BucketConfig{bucket_ratio}.validate();
    return choice;
  }

  ExperimentConfig base_config() const {
    ExperimentConfig cfg;
    cfg.repetitions = reps;
    cfg.master_seed = seed;
    cfg.distribution = DistributionSpec::parse(dist);
    cfg.sorter = sorter_choice();
    cfg.measure_time = timing;
    cfg.threads = threads;
    return cfg;
  }
};

std::string render_rows(std::span<const CsvRow> rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json")
    write_json(os, rows);
  else
    write_csv(os, rows);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file)
    throw IoError("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-")
    out << text;
  else
    write_file(path, text);
}

std::vector<CsvRow> to_rows(std::span<const ExperimentStats> stats) {
  std::vector<CsvRow> rows;
  rows.reserve(stats.size());
  for (const auto& s : stats)
    rows.push_back(to_csv_row(s));
  return rows;
}

const ExperimentStats& find_row(std::span<const ExperimentStats> rows, Algorithm algorithm,
                                std::size_t n, std::size_t m) {
  for (const auto& r : rows) {
    if (r.config.algorithm == algorithm && r.config.n == n && r.config.m == m)
      return r;
  }
  throw std::logic_error("missing sweep row");
}

double gap_ratio(std::span<const ExperimentStats> rows, std::size_t n, std::size_t m) {
  const double sorted = find_row(rows, Algorithm::sorted_greedy, n, m).mean_gap;
  const double greedy = find_row(rows, Algorithm::greedy, n, m).mean_gap;
  return sorted > 0.0 ? greedy / sorted : std::numeric_limits<double>::infinity();
}

void print_ratio_table(std::ostream& os, std::span<const ExperimentStats> rows) {
  auto cell = [&os](const auto& v, int width) { os << ' ' << std::setw(width) << v; };
  cell("n", 6);
  cell("m", 4);
  cell("greedy", 13);
  cell("sigma", 13);
  cell("sorted", 13);
  cell("sigma", 13);
  cell("ratio", 11);
  os << '\n';
  for (const auto& r : rows) {
    if (r.config.algorithm != Algorithm::greedy)
      continue;
    const auto& s = find_row(rows, Algorithm::sorted_greedy, r.config.n, r.config.m);
    cell(r.config.n, 6);
    cell(r.config.m, 4);
    cell(format_real(r.mean_gap), 13);
    cell(format_real(r.sigma_gap), 13);
    cell(format_real(s.mean_gap), 13);
    cell(format_real(s.sigma_gap), 13);
    cell(format_real(gap_ratio(rows, r.config.n, r.config.m)), 11);
    os << '\n';
  }
}

std::ostream& summary_stream(const std::string& output, std::ostream& out, std::ostream& err) {
  return output == "-" ? err : out;
}

// ---- allocate ---------------------------------------------------------------

struct AllocateFlags {
  std::string weights;
  std::string file;
  std::size_t m = 2;
  std::string algo = "both";
  std::string sorter = "comparison";
  double bucket_ratio = BucketConfig::kDefaultRatio;
  std::string format = "text";
};

int cmd_allocate(const AllocateFlags& f, std::ostream& out) {
  const BallSet balls = f.file.empty() ? parse_weight_list(f.weights) : read_weight_file(f.file);
  const SorterChoice sorter{parse_sorter_kind(f.sorter), f.bucket_ratio};
  if (sorter.kind == SorterKind::distribution)
    BucketConfig{f.bucket_ratio}.validate();

  std::vector<Algorithm> algorithms;
  if (f.algo == "both")
    algorithms = {Algorithm::greedy, Algorithm::sorted_greedy};
  else
    algorithms = {parse_algorithm(f.algo)};

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (auto algorithm : algorithms) {
    const AllocationResult r = run_allocator(balls, f.m, algorithm, sorter);
    if (f.format == "json") {
      doc.push_back({{"algorithm", to_string(algorithm)},
                     {"n", balls.size()},
                     {"m", f.m},
                     {"loads", r.loads},
                     {"assignments", r.assignments},
                     {"gap", r.gap},
                     {"ideal_load", r.ideal_load},
                     {"total_weight", r.total_weight}});
      continue;
    }
    out << "algorithm: " << to_string(algorithm);
    if (algorithm == Algorithm::sorted_greedy)
      out << " (" << to_string(sorter.kind) << " sort)";
    out << "\nballs: " << balls.size() << "\nbins: " << f.m << '\n';
    for (std::size_t b = 0; b < r.bins(); ++b) {
      out << "  bin " << b << ": load " << format_real(r.loads[b]) << "  balls [";
      for (std::size_t i = 0; i < r.assignments[b].size(); ++i)
        out << (i ? " " : "") << r.assignments[b][i];
      out << "]\n";
    }
    out << "gap: " << format_real(r.gap) << "\nideal_load: " << format_real(r.ideal_load)
        << "\n\n";
  }
  if (f.format == "json")
    out << doc.dump(2) << '\n';
  return kSuccess;
}

// ---- run / sweeps -------------------------------------------------------------

int cmd_run(const ExperimentFlags& f, std::size_t n, std::size_t m, const std::string& algo,
            std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg = f.base_config();
  cfg.n = n;
  cfg.m = m;
  std::vector<ExperimentStats> stats;
  for (auto algorithm : {Algorithm::greedy, Algorithm::sorted_greedy}) {
    if (algo != "both" && parse_algorithm(algo) != algorithm)
      continue;
    cfg.algorithm = algorithm;
    stats.push_back(run_experiment(cfg));
  }
  emit(f.output, render_rows(to_rows(stats), f.format), out);
  if (stats.size() == 2)
    print_ratio_table(summary_stream(f.output, out, err), stats);
  return kSuccess;
}

int cmd_sweep(const ExperimentFlags& f, const std::vector<ExperimentStats>& rows,
              std::ostream& out, std::ostream& err) {
  emit(f.output, render_rows(to_rows(rows), f.format), out);
  print_ratio_table(summary_stream(f.output, out, err), rows);
  return kSuccess;
}

// ---- bench --------------------------------------------------------------------

void print_timing(std::ostream& os, const TimingReport& t) {
  os << "timing n=" << t.n << " m=" << t.m << " reps=" << t.repetitions
     << " sorter=" << to_string(t.options.sorter.kind) << '\n'
     << "  greedy total    mean " << format_real(t.mean_total_greedy_ns) << " ns, median "
     << format_real(t.median_total_greedy_ns) << " ns\n"
     << "  sorted total    mean " << format_real(t.mean_total_sorted_ns) << " ns, median "
     << format_real(t.median_total_sorted_ns) << " ns\n"
     << "  sort phase      mean " << format_real(t.mean_sort_phase_ns) << " ns, median "
     << format_real(t.median_sort_phase_ns) << " ns\n"
     << "  overhead_fraction " << format_real(t.overhead_fraction) << '\n';
}

int cmd_bench(const ExperimentFlags& f, std::size_t n, std::size_t m, std::size_t warmup,
              std::ostream& out, std::ostream& err) {
  TimingOptions opts;
  opts.seed = f.seed;
  opts.distribution = DistributionSpec::parse(f.dist);
  opts.sorter = f.sorter_choice();
  opts.warmup = warmup;
  const TimingReport t = timing_benchmark(n, m, f.reps, opts);
  const ExperimentStats rows[] = {t.greedy, t.sorted};
  emit(f.output, render_rows(to_rows(rows), f.format), out);
  print_timing(summary_stream(f.output, out, err), t);
  return kSuccess;
}

// ---- oracle-check -------------------------------------------------------------

int cmd_oracle_check(const ExperimentFlags& f, std::size_t n, std::size_t m,
                     std::size_t trials, std::ostream& out) {
  if (n == 0)
    throw InvalidInput("no balls");
  if (n > kOracleMaxBalls || m > kOracleMaxBins)
    throw InvalidInput("instance too large for oracle");
  const DistributionSpec dist = DistributionSpec::parse(f.dist);
  const SorterChoice sorter = f.sorter_choice();

  std::ostringstream csv;
  csv << "trial,n,m,seed,optimal_gap,sorted_greedy_gap,greedy_gap\n";
  std::size_t violations = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = repetition_seed(f.seed, trial);
    const BallSet balls = sample_uniform_weights(n, dist, seed);
    const OracleResult best = optimal_gap_bruteforce(balls, m);
    const AllocationResult sorted = sorted_greedy_allocate(balls, m, sorter);
    const AllocationResult greedy = greedy_allocate(balls, m);
    const double tol = load_tolerance(balls.total());
    const bool ok = best.optimal_gap <= sorted.gap + tol && best.optimal_gap <= greedy.gap + tol;
    if (!ok)
      ++violations;
    out << "trial " << trial << ": optimal " << format_real(best.optimal_gap)
        << "  sorted-greedy " << format_real(sorted.gap) << "  greedy "
        << format_real(greedy.gap) << (ok ? "  ok" : "  VIOLATION") << '\n';
    csv << trial << ',' << n << ',' << m << ',' << seed << ',' << format_real(best.optimal_gap)
        << ',' << format_real(sorted.gap) << ',' << format_real(greedy.gap) << '\n';
  }
  if (f.output != "-")
    write_file(f.output, csv.str());
  out << trials << " trials, " << violations << " violation(s)\n";
  return violations == 0 ? kSuccess : kGateFailure;
}

// ---- repro --------------------------------------------------------------------

struct Gate {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Gate> n_sweep_gates(std::span<const ExperimentStats> m2, std::span<const ExperimentStats> m8) {
  std::vector<Gate> gates;
  for (auto [rows, m] : {std::pair{m2, std::size_t{2}}, std::pair{m8, std::size_t{8}}}) {
    Gate g{"gap ratio >= 10 for n in 512..4096, m=" + std::to_string(m), true, ""};
    for (std::size_t n : {512, 1024, 2048, 4096}) {
      const double ratio = gap_ratio(rows, n, m);
      g.pass = g.pass && ratio >= 10.0;
      g.detail += "n=" + std::to_string(n) + ":" + format_real(ratio) + " ";
    }
    gates.push_back(g);
  }

  const double big = gap_ratio(m2, 8192, 2);
  gates.push_back({"gap ratio >= 50 at n=8192, m=2", big >= 50.0, "ratio " + format_real(big)});

  const std::size_t decay_ns[] = {64, 256, 1024, 4096};
  {
    Gate g{"sorted-greedy gap strictly decreasing in n, 4096 < 64/10 (m=2)", true, ""};
    double prev = std::numeric_limits<double>::infinity();
    for (auto n : decay_ns) {
      const double gap = find_row(m2, Algorithm::sorted_greedy, n, 2).mean_gap;
      g.pass = g.pass && gap < prev;
      prev = gap;
      g.detail += "n=" + std::to_string(n) + ":" + format_real(gap) + " ";
    }
    const double first = find_row(m2, Algorithm::sorted_greedy, 64, 2).mean_gap;
    g.pass = g.pass && prev < first / 10.0;
    gates.push_back(g);
  }
  {
    Gate g{"greedy gap within 25% of its median across n (m=2)", true, ""};
    std::vector<double> gaps;
    for (auto n : decay_ns)
      gaps.push_back(find_row(m2, Algorithm::greedy, n, 2).mean_gap);
    const double median = summarize(gaps).median;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      g.pass = g.pass && std::abs(gaps[i] - median) <= 0.25 * median;
      g.detail += "n=" + std::to_string(decay_ns[i]) + ":" + format_real(gaps[i]) + " sigma " +
                  format_real(find_row(m2, Algorithm::greedy, decay_ns[i], 2).sigma_gap) + " ";
    }
    gates.push_back(g);
  }
  return gates;
}

Gate m_sweep_gate(std::span<const ExperimentStats> rows, std::size_t n,
               std::span<const std::size_t> ms) {
  Gate g{"m-sweep shape at n=" + std::to_string(n), true, ""};
  for (auto m : ms) {
    const double ratio = gap_ratio(rows, n, m);
    g.pass = g.pass && ratio > 1.0;
    g.detail += "m=" + std::to_string(m) + ":" + format_real(ratio) + " ";
  }
  const double at2 = find_row(rows, Algorithm::greedy, n, 2).mean_gap;
  const double at32 = find_row(rows, Algorithm::greedy, n, 32).mean_gap;
  g.pass = g.pass && at32 > at2;
  g.detail += "greedy m=2:" + format_real(at2) + " m=32:" + format_real(at32);
  return g;
}

int cmd_repro(const ExperimentFlags& f, const std::string& out_dir, std::size_t bench_reps,
              std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    throw IoError("cannot create directory '" + out_dir + "': " + ec.message());

  ExperimentConfig base = f.base_config();
  const auto ns = default_sweep_ns();
  const auto ms = default_sweep_ms();
  auto save = [&](const std::string& name, std::span<const ExperimentStats> rows) {
    write_file((fs::path(out_dir) / name).string(), render_rows(to_rows(rows), "csv"));
  };

  base.m = 2;
  const auto by_n_m2 = sweep_n(ns, base);
  save("gap_vs_n_m2.csv", by_n_m2);
  base.m = 8;
  const auto by_n_m8 = sweep_n(ns, base);
  save("gap_vs_n_m8.csv", by_n_m8);
  base.n = 1024;
  const auto by_m_n1024 = sweep_m(ms, base);
  save("gap_vs_m_n1024.csv", by_m_n1024);
  base.n = 3027;
  const auto by_m_n3027 = sweep_m(ms, base);
  save("gap_vs_m_n3027.csv", by_m_n3027);

  TimingOptions topts;
  topts.seed = f.seed;
  topts.distribution = base.distribution;
  topts.sorter = base.sorter;
  const TimingReport timing = timing_benchmark(8192, 2, bench_reps, topts);
  const ExperimentStats bench_rows[] = {timing.greedy, timing.sorted};
  save("bench_n8192_m2.csv", bench_rows);

  std::vector<Gate> gates = n_sweep_gates(by_n_m2, by_n_m8);
  gates.push_back(m_sweep_gate(by_m_n1024, 1024, ms));
  gates.push_back(m_sweep_gate(by_m_n3027, 3027, ms));
  gates.push_back({"sorting overhead_fraction < 0.10 at n=8192, m=2", timing.overhead_fraction < 0.10,
                   "overhead " + format_real(timing.overhead_fraction)});

  std::ostringstream summary;
  summary << "gap vs n, m=2\n";
  print_ratio_table(summary, by_n_m2);
  summary << "\ngap vs n, m=8\n";
  print_ratio_table(summary, by_n_m8);
  summary << "\ngap vs m, n=1024\n";
  print_ratio_table(summary, by_m_n1024);
  summary << "\ngap vs m, n=3027\n";
  print_ratio_table(summary, by_m_n3027);
  summary << '\n';
  print_timing(summary, timing);
  summary << "\nreference greedy sigma: 0.23 (m=2), 0.15 (m=8); not gated\n\n";
  bool all = true;
  for (const auto& g : gates) {
    all = all && g.pass;
    summary << (g.pass ? "PASS " : "FAIL ") << g.name << "  [" << g.detail << "]\n";
  }
  summary << (all ? "verdict: all gates passed\n" : "verdict: some gates failed\n");
  write_file((fs::path(out_dir) / "summary.txt").string(), summary.str());
  out << summary.str();
  return all ? kSuccess : kGateFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Offline weighted balls-into-bins: Greedy[m] vs SortedGreedy[m]", "ballsbins"};
  app.require_subcommand(1);

  AllocateFlags alloc;
  auto* allocate = app.add_subcommand("allocate", "Allocate one ball set and print the bins");
  auto* weights_opt = allocate->add_option("--weights", alloc.weights, "Inline weights, e.g. 1,1,2,3");
  auto* file_opt = allocate->add_option("--file", alloc.file, "Weight file, one value per line");
  weights_opt->excludes(file_opt);
  allocate->add_option("--m", alloc.m, "Number of bins")->check(CLI::PositiveNumber);
  allocate->add_option("--algo", alloc.algo, "greedy, sorted-greedy or both")
      ->check(CLI::IsMember({"greedy", "sorted-greedy", "both"}));
  allocate->add_option("--sorter", alloc.sorter)->check(CLI::IsMember({"comparison", "distribution"}));
  allocate->add_option("--bucket-ratio", alloc.bucket_ratio);
  allocate->add_option("--format", alloc.format)->check(CLI::IsMember({"text", "json"}));

  ExperimentFlags run_flags;
  std::size_t run_n = 1024;
  std::size_t run_m = 2;
  std::string run_algo = "both";
  auto* run_cmd = app.add_subcommand("run", "Repeated experiment at one (n, m)");
  run_cmd->add_option("--n", run_n, "Balls")->check(CLI::PositiveNumber);
  run_cmd->add_option("--m", run_m, "Bins")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  run_cmd->add_option("--algo", run_algo)->check(CLI::IsMember({"greedy", "sorted-greedy", "both"}));
  run_flags.add_to(*run_cmd);
  run_flags.add_run_flags(*run_cmd);

  ExperimentFlags sn_flags;
  std::vector<std::size_t> sn_ns = default_sweep_ns();
  std::size_t sn_m = 2;
  auto* sweep_n_cmd = app.add_subcommand("sweep-n", "Gap versus number of balls");
  sweep_n_cmd->add_option("--ns", sn_ns, "Ball counts")->delimiter(',')->check(CLI::PositiveNumber);
  sweep_n_cmd->add_option("--m", sn_m, "Bins")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  sn_flags.add_to(*sweep_n_cmd);
  sn_flags.add_run_flags(*sweep_n_cmd);

  ExperimentFlags sm_flags;
  std::vector<std::size_t> sm_ms = default_sweep_ms();
  std::size_t sm_n = 1024;
  auto* sweep_m_cmd = app.add_subcommand("sweep-m", "Gap versus number of bins");
  sweep_m_cmd->add_option("--ms", sm_ms, "Bin counts")->delimiter(',')->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  sweep_m_cmd->add_option("--n", sm_n, "Balls")->check(CLI::PositiveNumber);
  sm_flags.add_to(*sweep_m_cmd);
  sm_flags.add_run_flags(*sweep_m_cmd);

  ExperimentFlags bench_flags;
  bench_flags.reps = 100;
  std::size_t bench_n = 8192;
  std::size_t bench_m = 2;
  std::size_t bench_warmup = 5;
  auto* bench = app.add_subcommand("bench", "Time both allocators and the sort phase");
  bench->add_option("--n", bench_n, "Balls")->check(CLI::PositiveNumber);
  bench->add_option("--m", bench_m, "Bins")->check(CLI::PositiveNumber);
  bench->add_option("--warmup", bench_warmup, "Untimed warm-up rounds");
  bench_flags.add_to(*bench);

  ExperimentFlags oracle_flags;
  std::size_t oracle_n = 10;
  std::size_t oracle_m = 2;
  std::size_t oracle_trials = 50;
  auto* oracle = app.add_subcommand("oracle-check", "Compare both allocators with the exact optimum");
  oracle->add_option("--n", oracle_n, "Balls per instance (<= 16)");
  oracle->add_option("--m", oracle_m, "Bins (<= 4)")->check(CLI::PositiveNumber);
  oracle->add_option("--trials", oracle_trials, "Random instances")->check(CLI::PositiveNumber);
  oracle_flags.add_to(*oracle, false);

  ExperimentFlags repro_flags;
  std::string repro_dir = "repro-out";
  std::size_t repro_bench_reps = 100;
  auto* repro = app.add_subcommand("repro", "Run all n- and m-sweeps and the timing comparison, with gates");
  repro->add_option("--out-dir", repro_dir, "Directory for CSV files and summary.txt");
  repro->add_option("--reps", repro_flags.reps, "Repetitions per point")->check(CLI::PositiveNumber);
  repro->add_option("--bench-reps", repro_bench_reps, "Timing repetitions")->check(CLI::PositiveNumber);
  repro->add_option("--seed", repro_flags.seed, "Master seed");
  repro->add_option("--sorter", repro_flags.sorter)->check(CLI::IsMember({"comparison", "distribution"}));
  repro->add_option("--bucket-ratio", repro_flags.bucket_ratio);
  repro->add_option("--threads", repro_flags.threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (allocate->parsed()) {
      if (alloc.weights.empty() && alloc.file.empty())
        throw InvalidInput("one of --weights or --file is required");
      return cmd_allocate(alloc, out);
    }
    if (run_cmd->parsed())
      return cmd_run(run_flags, run_n, run_m, run_algo, out, err);
    if (sweep_n_cmd->parsed()) {
      ExperimentConfig base = sn_flags.base_config();
      base.m = sn_m;
      base.validate();
      return cmd_sweep(sn_flags, sweep_n(sn_ns, base), out, err);
    }
    if (sweep_m_cmd->parsed()) {
      ExperimentConfig base = sm_flags.base_config();
      base.n = sm_n;
      base.validate();
      return cmd_sweep(sm_flags, sweep_m(sm_ms, base), out, err);
    }
    if (bench->parsed())
      return cmd_bench(bench_flags, bench_n, bench_m, bench_warmup, out, err);
    if (oracle->parsed())
      return cmd_oracle_check(oracle_flags, oracle_n, oracle_m, oracle_trials, out);
    if (repro->parsed())
      return cmd_repro(repro_flags, repro_dir, repro_bench_reps, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace ballsbins::cli
