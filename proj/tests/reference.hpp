#pragma once

// Test-only reference implementations, written independently of src/.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace reference {

// Greedy placement re-summing every bin from its contents at each step.
inline std::vector<std::vector<std::size_t>> greedy_bins(const std::vector<double>& w,
                                                         const std::vector<std::size_t>& visit,
                                                         std::size_t m) {
  std::vector<std::vector<std::size_t>> bins(m);
  auto load = [&](std::size_t b) {
    double s = 0;
    for (auto i : bins[b])
      s += w[i];
    return s;
  };
  for (std::size_t step = 0; step < visit.size(); ++step) {
    std::size_t best = 0;
    for (std::size_t b = 1; b < m; ++b)
      if (load(b) < load(best))
        best = b;
    bins[best].push_back(visit[step]);
  }
  return bins;
}

inline std::vector<double> loads_of(const std::vector<double>& w,
                                    const std::vector<std::vector<std::size_t>>& bins) {
  std::vector<double> out;
  for (const auto& bin : bins) {
    double s = 0;
    for (auto i : bin)
      s += w[i];
    out.push_back(s);
  }
  return out;
}

inline double spread(const std::vector<double>& loads) {
  return *std::max_element(loads.begin(), loads.end()) -
         *std::min_element(loads.begin(), loads.end());
}

// Stable descending order of indices.
inline std::vector<std::size_t> descending_order(const std::vector<double>& w) {
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return w[a] > w[b]; });
  return idx;
}

// Minimum gap over all m^n assignments (base-m counter, no pruning).
inline double brute_force_gap(const std::vector<double>& w, std::size_t m) {
  const std::size_t n = w.size();
  std::vector<std::size_t> digit(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<double> loads(m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      loads[digit[i]] += w[i];
    best = std::min(best, spread(loads));
    std::size_t pos = 0;
    while (pos < n && ++digit[pos] == m)
      digit[pos++] = 0;
    if (pos == n)
      return best;
  }
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n, double hi = 10.0) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<double> w(n);
  for (auto& x : w)
    x = u(rng);
  return w;
}

}  // namespace reference
