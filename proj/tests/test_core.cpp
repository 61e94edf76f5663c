/*
 Copyright 2026 The safeddp Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "safeddp/cost.hpp"
#include "safeddp/models.hpp"
#include "safeddp/trajectory.hpp"

using namespace safeddp;

namespace {

std::vector<Vec> zero_controls(int n, int dim) {
  return std::vector<Vec>(n, Vec::Zero(dim));
}

}  // namespace

TEST_CASE("rollout: unicycle with zero controls stays put") {
  Unicycle dyn(0.05);
  const Vec x0 = Vec::Zero(3);
  const auto traj = rollout(dyn, x0, zero_controls(17, 2));
  REQUIRE(traj.states.size() == 18);
  for (const Vec& x : traj.states) {
    CHECK(x.isZero(0.0));
  }
}

TEST_CASE("rollout: controls are clamped to the box") {
  Unicycle dyn(0.01);
  std::vector<Vec> controls(5, Vec::Zero(2));
  controls[2] << 150.0, -300.0;
  const auto traj = rollout(dyn, Vec::Zero(3), controls,
                            ControlLimits{-100.0, 100.0});
  CHECK(traj.controls[2][0] == doctest::Approx(100.0));
  CHECK(traj.controls[2][1] == doctest::Approx(-100.0));

  SUBCASE("clipping is idempotent") {
    const auto again = rollout(dyn, Vec::Zero(3), traj.controls,
                               ControlLimits{-100.0, 100.0});
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      CHECK(again.states[k] == traj.states[k]);
    }
  }
}

TEST_CASE("rollout: scalar accumulator system") {
  // x' = x + u
  oracles::LinearModel dyn(Mat::Identity(1, 1), Mat::Identity(1, 1));
  std::vector<Vec> controls;
  controls.push_back(Vec::Constant(1, 1.0));
  controls.push_back(Vec::Constant(1, 2.0));
  const auto traj = rollout(dyn, Vec::Constant(1, 1.0), controls);
  CHECK(traj.states[0][0] == doctest::Approx(1.0));
  CHECK(traj.states[1][0] == doctest::Approx(2.0));
  CHECK(traj.states[2][0] == doctest::Approx(4.0));
}

TEST_CASE("rollout: determinism is bitwise") {
  Unicycle dyn(0.02);
  std::mt19937_64 rng(42);
  std::vector<Vec> controls;
  for (int k = 0; k < 50; ++k) controls.push_back(oracles::random_vec(rng, 2, 3.0));
  Vec x0(3);
  x0 << 0.3, -0.7, 1.1;
  const auto a = rollout(dyn, x0, controls);
  const auto b = rollout(dyn, x0, controls);
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    CHECK(a.states[k] == b.states[k]);
  }
}

TEST_CASE("rollout: divergence reports the first bad index") {
  // x' = 2x blows past 1e8 from x0=1 at step 27 (2^27 > 1e8).
  oracles::LinearModel dyn(2.0 * Mat::Identity(1, 1), Mat::Identity(1, 1));
  bool thrown = false;
  try {
    rollout(dyn, Vec::Constant(1, 1.0), zero_controls(60, 1));
  } catch (const DivergenceError& e) {
    thrown = true;
    CHECK(e.step() == 27);
  }
  CHECK(thrown);
}

TEST_CASE("total_cost") {
  SUBCASE("zero at the quadratic center") {
    Unicycle dyn(0.1);
    Vec ref(3);
    ref << 1.0, 2.0, 0.5;
    QuadraticCost cost(Mat::Identity(3, 3), Mat::Identity(2, 2),
                       5.0 * Mat::Identity(3, 3), ref);
    const auto traj = rollout(dyn, ref, zero_controls(4, 2));
    CHECK(total_cost(traj, cost) == doctest::Approx(0.0));
  }

  SUBCASE("single control term, no state weight") {
    oracles::LinearModel dyn(Mat::Identity(1, 1), Mat::Identity(1, 1));
    QuadraticCost cost(Mat::Zero(1, 1), Mat::Identity(1, 1), Mat::Zero(1, 1),
                       Vec::Zero(1));
    std::vector<Vec> controls{Vec::Constant(1, 2.0)};
    const auto traj = rollout(dyn, Vec::Zero(1), controls);
    CHECK(total_cost(traj, cost) == doctest::Approx(4.0));
  }

  SUBCASE("matches the brute-force summation oracle") {
    std::mt19937_64 rng(7);
    Unicycle dyn(0.05);
    const Mat Q = oracles::random_psd(rng, 3);
    const Mat R = oracles::random_psd(rng, 2) + Mat::Identity(2, 2);
    const Mat S = oracles::random_psd(rng, 3);
    const Vec ref = oracles::random_vec(rng, 3);
    QuadraticCost cost(Q, R, S, ref);

    std::vector<Vec> controls;
    for (int k = 0; k < 30; ++k) controls.push_back(oracles::random_vec(rng, 2));
    auto traj = rollout(dyn, oracles::random_vec(rng, 3), controls);

    double expected = 0.0;
    for (int k = 0; k < 30; ++k) {
      const Vec dx = traj.states[k] - ref;
      expected += dx.dot(Q * dx) + controls[k].dot(R * controls[k]);
    }
    const Vec dxn = traj.states.back() - ref;
    expected += dxn.dot(S * dxn);

    CHECK(total_cost(traj, cost) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(evaluate_costs(traj, cost) ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("dimension mismatch is rejected") {
    oracles::LinearModel dyn(Mat::Identity(2, 2), Mat::Identity(2, 2));
    QuadraticCost cost(Mat::Identity(3, 3), Mat::Identity(2, 2),
                       Mat::Identity(3, 3), Vec::Zero(3));
    const auto traj = rollout(dyn, Vec::Zero(2), zero_controls(3, 2));
    CHECK_THROWS_AS(total_cost(traj, cost), std::invalid_argument);
  }
}

TEST_CASE("is_safe") {
  Trajectory traj;
  traj.states.assign(6, Vec::Zero(1));
  traj.controls.assign(5, Vec::Zero(1));
  traj.h_values.assign(6, {0.5, 0.5});

  CHECK(is_safe(traj).safe);

  traj.h_values[3][1] = -1.0;
  const auto report = is_safe(traj);
  REQUIRE_FALSE(report.safe);
  CHECK(report.first->step == 3);
  CHECK(report.first->constraint == 1);
  CHECK(report.first->h == doctest::Approx(-1.0));
}

TEST_CASE("quadratic cost validates its matrices") {
  CHECK_THROWS_AS(QuadraticCost(Mat::Identity(2, 2), Mat::Zero(1, 1),
                                Mat::Identity(2, 2), Vec::Zero(2)),
                  std::invalid_argument);  // R not PD
  Mat notsym(2, 2);
  notsym << 1.0, 0.5, -0.5, 1.0;
  CHECK_THROWS_AS(QuadraticCost(notsym, Mat::Identity(1, 1), Mat::Zero(2, 2),
                                Vec::Zero(2)),
                  std::invalid_argument);
}
