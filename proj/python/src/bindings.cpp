#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballsbins/allocators.hpp"
#include "ballsbins/core.hpp"
#include "ballsbins/experiments.hpp"
#include "ballsbins/oracle.hpp"
#include "ballsbins/sorting.hpp"

namespace py = pybind11;
namespace bb = ballsbins;

namespace {

bb::SorterChoice make_sorter(const std::string& kind, double bucket_ratio) {
  return {bb::parse_sorter_kind(kind), bucket_ratio};
}

py::tuple sorted_tuple(const bb::SortedBalls& s) { return py::make_tuple(s.weights, s.order); }

}  // namespace

PYBIND11_MODULE(_ballsbins, m) {
  m.doc() = "Offline weighted balls-into-bins allocators (Greedy[m], SortedGreedy[m]).";

  py::register_exception<bb::InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  py::class_<bb::AllocationResult>(m, "AllocationResult")
      .def_readonly("loads", &bb::AllocationResult::loads)
      .def_readonly("assignments", &bb::AllocationResult::assignments)
      .def_readonly("gap", &bb::AllocationResult::gap)
      .def_readonly("ideal_load", &bb::AllocationResult::ideal_load)
      .def_readonly("total_weight", &bb::AllocationResult::total_weight)
      .def("__repr__", [](const bb::AllocationResult& r) {
        return "<AllocationResult bins=" + std::to_string(r.bins()) +
               " gap=" + std::to_string(r.gap) + ">";
      });

  m.def("gap", [](const std::vector<double>& loads) { return bb::gap(loads); }, py::arg("loads"));
  m.def("ideal_load",
        [](std::vector<double> weights, std::size_t bins) {
          return bb::ideal_load(bb::BallSet(std::move(weights)), bins);
        },
        py::arg("weights"), py::arg("m"));
  m.def("find_lightest_bin",
        [](const std::vector<double>& loads) { return bb::find_lightest_bin(loads); },
        py::arg("loads"));

  m.def("greedy_allocate",
        [](std::vector<double> weights, std::size_t bins) {
          return bb::greedy_allocate(bb::BallSet(std::move(weights)), bins);
        },
        py::arg("weights"), py::arg("m"));
  m.def("sorted_greedy_allocate",
        [](std::vector<double> weights, std::size_t bins, const std::string& sorter,
           double bucket_ratio) {
          return bb::sorted_greedy_allocate(bb::BallSet(std::move(weights)), bins,
                                            make_sorter(sorter, bucket_ratio));
        },
        py::arg("weights"), py::arg("m"), py::arg("sorter") = "comparison",
        py::arg("bucket_ratio") = bb::BucketConfig::kDefaultRatio);

  m.def("sort_descending_comparison",
        [](std::vector<double> weights) {
          return sorted_tuple(bb::sort_descending_comparison(bb::BallSet(std::move(weights))));
        },
        py::arg("weights"), "Returns (sorted_weights, original_indices).");
  m.def("sort_descending_distribution",
        [](std::vector<double> weights, double bucket_ratio) {
          return sorted_tuple(bb::sort_descending_distribution(bb::BallSet(std::move(weights)),
                                                               bb::BucketConfig{bucket_ratio}));
        },
        py::arg("weights"), py::arg("bucket_ratio") = bb::BucketConfig::kDefaultRatio,
        "Returns (sorted_weights, original_indices).");
  m.def("bucket_count",
        [](std::size_t n, double ratio) { return bb::BucketConfig{ratio}.bucket_count(n); },
        py::arg("n"), py::arg("ratio") = bb::BucketConfig::kDefaultRatio);

  py::class_<bb::OracleResult>(m, "OracleResult")
      .def_readonly("optimal_gap", &bb::OracleResult::optimal_gap)
      .def_readonly("witness", &bb::OracleResult::witness)
      .def_readonly("instances_searched", &bb::OracleResult::instances_searched);
  m.def("optimal_gap_bruteforce",
        [](std::vector<double> weights, std::size_t bins) {
          return bb::optimal_gap_bruteforce(bb::BallSet(std::move(weights)), bins);
        },
        py::arg("weights"), py::arg("m"));
  m.def("verify_allocation",
        [](const bb::AllocationResult& result, std::vector<double> weights) {
          const auto v = bb::verify_allocation(result, bb::BallSet(std::move(weights)));
          return py::make_tuple(v.ok, v.message);
        },
        py::arg("result"), py::arg("weights"), "Returns (ok, message).");

  m.def("sample_uniform_weights",
        [](std::size_t n, double lower, double upper, std::uint64_t seed) {
          const auto balls = bb::sample_uniform_weights(
              n, bb::DistributionSpec{bb::DistributionKind::uniform, lower, upper}, seed);
          return std::vector<double>(balls.begin(), balls.end());
        },
        py::arg("n"), py::arg("lower") = 0.0, py::arg("upper") = 10.0, py::arg("seed") = 42);
  m.def("repetition_seed", &bb::repetition_seed, py::arg("master_seed"), py::arg("rep"));

  py::class_<bb::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init([](std::size_t n, std::size_t bins, std::size_t repetitions,
                       std::uint64_t seed, double lower, double upper,
                       const std::string& algorithm, const std::string& sorter,
                       double bucket_ratio, bool keep_per_rep_gaps, std::size_t threads) {
             bb::ExperimentConfig cfg;
             cfg.n = n;
             cfg.m = bins;
             cfg.repetitions = repetitions;
             cfg.master_seed = seed;
             cfg.distribution = {bb::DistributionKind::uniform, lower, upper};
             cfg.algorithm = bb::parse_algorithm(algorithm);
             cfg.sorter = make_sorter(sorter, bucket_ratio);
             cfg.keep_per_rep_gaps = keep_per_rep_gaps;
             cfg.threads = threads;
             return cfg;
           }),
           py::arg("n"), py::arg("m") = 2, py::arg("repetitions") = 1000, py::arg("seed") = 42,
           py::arg("lower") = 0.0, py::arg("upper") = 10.0, py::arg("algorithm") = "sorted-greedy",
           py::arg("sorter") = "comparison",
           py::arg("bucket_ratio") = bb::BucketConfig::kDefaultRatio,
           py::arg("keep_per_rep_gaps") = false, py::arg("threads") = 0)
      .def_readwrite("n", &bb::ExperimentConfig::n)
      .def_readwrite("m", &bb::ExperimentConfig::m)
      .def_readwrite("repetitions", &bb::ExperimentConfig::repetitions)
      .def_readwrite("master_seed", &bb::ExperimentConfig::master_seed)
      .def_property_readonly("algorithm",
                             [](const bb::ExperimentConfig& c) { return std::string(bb::to_string(c.algorithm)); });

  py::class_<bb::ExperimentStats>(m, "ExperimentStats")
      .def_readonly("config", &bb::ExperimentStats::config)
      .def_readonly("mean_gap", &bb::ExperimentStats::mean_gap)
      .def_readonly("sigma_gap", &bb::ExperimentStats::sigma_gap)
      .def_readonly("min_gap", &bb::ExperimentStats::min_gap)
      .def_readonly("max_gap", &bb::ExperimentStats::max_gap)
      .def_readonly("per_rep_gaps", &bb::ExperimentStats::per_rep_gaps)
      .def_readonly("mean_runtime_ns", &bb::ExperimentStats::mean_runtime_ns);

  m.def("run_experiment", &bb::run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_n",
        [](const std::vector<std::size_t>& ns, const bb::ExperimentConfig& base) {
          return bb::sweep_n(ns, base);
        },
        py::arg("ns"), py::arg("base"), py::call_guard<py::gil_scoped_release>());
  m.def("sweep_m",
        [](const std::vector<std::size_t>& ms, const bb::ExperimentConfig& base) {
          return bb::sweep_m(ms, base);
        },
        py::arg("ms"), py::arg("base"), py::call_guard<py::gil_scoped_release>());

  py::class_<bb::TimingReport>(m, "TimingReport")
      .def_readonly("n", &bb::TimingReport::n)
      .def_readonly("m", &bb::TimingReport::m)
      .def_readonly("repetitions", &bb::TimingReport::repetitions)
      .def_readonly("mean_total_greedy_ns", &bb::TimingReport::mean_total_greedy_ns)
      .def_readonly("mean_total_sorted_ns", &bb::TimingReport::mean_total_sorted_ns)
      .def_readonly("mean_sort_phase_ns", &bb::TimingReport::mean_sort_phase_ns)
      .def_readonly("median_total_greedy_ns", &bb::TimingReport::median_total_greedy_ns)
      .def_readonly("median_total_sorted_ns", &bb::TimingReport::median_total_sorted_ns)
      .def_readonly("median_sort_phase_ns", &bb::TimingReport::median_sort_phase_ns)
      .def_readonly("overhead_fraction", &bb::TimingReport::overhead_fraction);
  m.def("timing_benchmark",
        [](std::size_t n, std::size_t bins, std::size_t reps, std::uint64_t seed,
           const std::string& sorter, std::size_t warmup) {
          bb::TimingOptions opts;
          opts.seed = seed;
          opts.sorter = make_sorter(sorter, bb::BucketConfig::kDefaultRatio);
          opts.warmup = warmup;
          return bb::timing_benchmark(n, bins, reps, opts);
        },
        py::arg("n"), py::arg("m") = 2, py::arg("reps") = 100, py::arg("seed") = 42,
        py::arg("sorter") = "comparison", py::arg("warmup") = 5,
        py::call_guard<py::gil_scoped_release>());
}
