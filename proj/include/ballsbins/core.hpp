#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ballsbins {

/// Load units are dimensionless reals; ball weights and bin loads share this type.
using Weight = double;

/// Thrown for inputs that violate an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered, validated sequence of ball weights.
///
/// Every weight is finite and non-negative, and the set holds at least one
/// ball. Order is significant: greedy placement consumes balls in this order.
class BallSet {
public:
  explicit BallSet(std::vector<Weight> weights);
  BallSet(std::initializer_list<Weight> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  Weight operator[](std::size_t i) const noexcept { return weights_[i]; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  Weight total() const noexcept;
  Weight max_weight() const noexcept;

private:
  std::vector<Weight> weights_;
};

/// Final state of an allocation.
///
/// `assignments[b]` lists the indices (into the caller's original ball order)
/// of the balls placed in bin `b`, in placement order.
struct AllocationResult {
  std::vector<Weight> loads;
  std::vector<std::vector<std::size_t>> assignments;
  Weight gap = 0.0;
  Weight ideal_load = 0.0;
  Weight total_weight = 0.0;

  std::size_t bins() const noexcept { return loads.size(); }
};

/// max(loads) - min(loads). Throws InvalidInput("no bins") on empty input.
Weight gap(std::span<const Weight> loads);

/// Total weight divided evenly over `m` bins.
Weight ideal_load(const BallSet& balls, std::size_t m);

/// Absolute tolerance for comparing load sums that were accumulated in
/// different orders: 1e-9 * max(1, total).
double load_tolerance(Weight total) noexcept;

}  // namespace ballsbins
