#include "ballsbins/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ballsbins {

namespace {

class Enumerator {
public:
  Enumerator(const BallSet& balls, std::size_t m)
      : balls_(balls), loads_(m, 0.0), bin_of_(balls.size(), 0),
        best_bins_(balls.size(), 0) {}

  OracleResult run() {
    loads_[0] = balls_[0];
    descend(1, 1);

    OracleResult out;
    out.optimal_gap = best_gap_;
    out.instances_searched = leaves_;
    out.witness.resize(loads_.size());
    for (std::size_t i = 0; i < best_bins_.size(); ++i)
      out.witness[best_bins_[i]].push_back(i);
    return out;
  }

private:
  // `opened` bins are in use; the next ball may join one of them or open one more.
  void descend(std::size_t ball, std::size_t opened) {
    if (ball == balls_.size()) {
      ++leaves_;
      const Weight g = gap(loads_);
      if (g < best_gap_) {
        best_gap_ = g;
        best_bins_ = bin_of_;
      }
      return;
    }
    const std::size_t limit = std::min(opened + 1, loads_.size());
    for (std::size_t b = 0; b < limit; ++b) {
      const Weight before = loads_[b];
      loads_[b] += balls_[ball];
      bin_of_[ball] = b;
      descend(ball + 1, std::max(opened, b + 1));
      loads_[b] = before;
    }
  }

  const BallSet& balls_;
  std::vector<Weight> loads_;
  std::vector<std::size_t> bin_of_;
  std::vector<std::size_t> best_bins_;
  Weight best_gap_ = std::numeric_limits<Weight>::infinity();
  std::uint64_t leaves_ = 0;
};

}  // namespace

OracleResult optimal_gap_bruteforce(const BallSet& balls, std::size_t m) {
  if (m == 0)
    throw InvalidInput("no bins");
  if (balls.size() > kOracleMaxBalls || m > kOracleMaxBins)
    throw InvalidInput("instance too large for oracle");
  return Enumerator(balls, m).run();
}

Verification verify_allocation(const AllocationResult& result, const BallSet& balls) {
  auto fail = [](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return Verification{false, os.str()};
  };

  const std::size_t n = balls.size();
  const std::size_t m = result.loads.size();
  if (m == 0)
    return fail("no bins");
  if (result.assignments.size() != m)
    return fail("assignments list ", result.assignments.size(), " bins but loads list ", m);

  std::vector<bool> seen(n, false);
  std::size_t placed = 0;
  const double tol = load_tolerance(balls.total());
  std::vector<Weight> recomputed(m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    for (auto idx : result.assignments[b]) {
      if (idx >= n)
        return fail("bin ", b, ": ball index ", idx, " out of range");
      if (seen[idx])
        return fail("ball ", idx, " assigned more than once");
      seen[idx] = true;
      ++placed;
      recomputed[b] += balls[idx];
    }
    if (std::abs(recomputed[b] - result.loads[b]) > tol)
      return fail("bin ", b, ": load ", result.loads[b], " but assigned weights sum to ",
                  recomputed[b]);
  }
  if (placed != n)
    return fail(n - placed, " ball(s) not assigned");

  if (result.gap != gap(result.loads))
    return fail("gap ", result.gap, " does not match loads");
  if (std::abs(result.gap - gap(recomputed)) > 2 * tol)
    return fail("gap ", result.gap, " does not match recomputed loads");
  return {};
}

}  // namespace ballsbins
