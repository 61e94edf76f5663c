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

#include "safeddp/trajectory.hpp"

#include <stdexcept>

namespace safeddp {

namespace {

bool state_ok(const Vec& x) {
  return x.allFinite() && x.lpNorm<Eigen::Infinity>() <= kStateMagnitudeLimit;
}

void fill_h_row(std::vector<double>& row, const SafetySet& monitors, int k,
                const Vec& x, int physical_dim) {
  row.resize(monitors.size());
  if (monitors.empty()) return;
  const Vec xp = physical_dim > 0 ? Vec(x.head(physical_dim)) : x;
  for (std::size_t i = 0; i < monitors.size(); ++i) {
    row[i] = monitors[i]->eval(k, xp);
  }
}

}  // namespace

Trajectory rollout(const DynamicsModel& dyn, const Vec& x0,
                   const std::vector<Vec>& controls,
                   const std::optional<ControlLimits>& limits,
                   const SafetySet& monitors, int physical_dim) {
  if (x0.size() != dyn.state_dim()) {
    throw std::invalid_argument("rollout: x0 dimension mismatch");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("rollout: x0 is not finite");
  }
  const int n = static_cast<int>(controls.size());

  Trajectory traj;
  traj.states.reserve(n + 1);
  traj.controls.reserve(n);
  traj.costs.assign(n + 1, 0.0);
  traj.h_values.resize(n + 1);

  traj.states.push_back(x0);
  if (!state_ok(traj.states.back())) throw DivergenceError(0);
  fill_h_row(traj.h_values[0], monitors, 0, x0, physical_dim);

  for (int k = 0; k < n; ++k) {
    if (controls[k].size() != dyn.control_dim()) {
      throw std::invalid_argument("rollout: control dimension mismatch");
    }
    Vec u = limits ? limits->clamp(controls[k]) : controls[k];
    Vec next = dyn.step(k, traj.states.back(), u);
    if (!state_ok(next)) throw DivergenceError(k + 1);
    traj.controls.push_back(std::move(u));
    traj.states.push_back(std::move(next));
    fill_h_row(traj.h_values[k + 1], monitors, k + 1, traj.states.back(),
               physical_dim);
  }
  return traj;
}

SafetyReport is_safe(const Trajectory& traj) {
  SafetyReport report;
  for (std::size_t k = 0; k < traj.h_values.size(); ++k) {
    const auto& row = traj.h_values[k];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!(row[i] > 0.0)) {
        report.safe = false;
        report.first = Violation{static_cast<int>(k), static_cast<int>(i),
                                 row[i]};
        return report;
      }
    }
  }
  return report;
}

}  // namespace safeddp
