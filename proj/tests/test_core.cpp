#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ballsbins/core.hpp"

using namespace ballsbins;

TEST_CASE("gap of loads") {
  CHECK(gap(std::vector<Weight>{5.0, 5.0, 5.0}) == 0.0);
  CHECK(gap(std::vector<Weight>{7.0, 9.0}) == 2.0);
  CHECK(gap(std::vector<Weight>{4.2}) == 0.0);
  CHECK_THROWS_WITH_AS(gap(std::vector<Weight>{}), "no bins", InvalidInput);
}

TEST_CASE("ideal load") {
  CHECK(ideal_load(BallSet{1, 1, 2, 3, 4, 5}, 2) == 8.0);
  CHECK(ideal_load(BallSet{10.0}, 2) == 5.0);
  CHECK(ideal_load(BallSet{3.0, 3.0}, 3) == 2.0);
  CHECK_THROWS_AS(ideal_load(BallSet{1.0}, 0), InvalidInput);
}

TEST_CASE("ball set rejects invalid weights") {
  CHECK_THROWS_WITH_AS(BallSet(std::vector<Weight>{}), "no balls", InvalidInput);
  CHECK_THROWS_AS(BallSet({1.0, -0.5}), InvalidInput);
  CHECK_THROWS_AS(BallSet({std::numeric_limits<double>::quiet_NaN()}), InvalidInput);
  CHECK_THROWS_AS(BallSet({std::numeric_limits<double>::infinity()}), InvalidInput);
  const BallSet ok{0.0, 2.5};
  CHECK(ok.size() == 2);
  CHECK(ok.total() == 2.5);
  CHECK(ok.max_weight() == 2.5);
}

TEST_CASE("gap is shift- and scale-covariant") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Weight> loads(1 + trial % 9);
    for (auto& x : loads)
      x = u(rng);
    const double g = gap(loads);
    CHECK(g >= 0.0);
    const double shift = u(rng);
    const double scale = u(rng);
    std::vector<Weight> shifted = loads, scaled = loads;
    for (auto& x : shifted)
      x += shift;
    for (auto& x : scaled)
      x *= scale;
    CHECK(gap(shifted) == doctest::Approx(g).epsilon(1e-12).scale(20.0));
    CHECK(gap(scaled) == doctest::Approx(scale * g).epsilon(1e-12));
  }
}
