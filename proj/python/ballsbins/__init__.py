"""Offline weighted balls-into-bins: Greedy[m] and SortedGreedy[m] allocators."""

from ._ballsbins import (
    AllocationResult,
    ExperimentConfig,
    ExperimentStats,
    InvalidInput,
    OracleResult,
    TimingReport,
    bucket_count,
    find_lightest_bin,
    gap,
    greedy_allocate,
    ideal_load,
    optimal_gap_bruteforce,
    repetition_seed,
    run_experiment,
    sample_uniform_weights,
    sort_descending_comparison,
    sort_descending_distribution,
    sorted_greedy_allocate,
    sweep_m,
    sweep_n,
    timing_benchmark,
    verify_allocation,
)

__all__ = [
    "AllocationResult",
    "ExperimentConfig",
    "ExperimentStats",
    "InvalidInput",
    "OracleResult",
    "TimingReport",
    "bucket_count",
    "find_lightest_bin",
    "gap",
    "greedy_allocate",
    "ideal_load",
    "optimal_gap_bruteforce",
    "repetition_seed",
    "run_experiment",
    "sample_uniform_weights",
    "sort_descending_comparison",
    "sort_descending_distribution",
    "sorted_greedy_allocate",
    "sweep_m",
    "sweep_n",
    "timing_benchmark",
    "verify_allocation",
]
