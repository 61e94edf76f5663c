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

#pragma once

#include <optional>
#include <vector>

#include "safeddp/common.hpp"
#include "safeddp/dynamics.hpp"
#include "safeddp/safety.hpp"

namespace safeddp {

/// Time-indexed rollout: N+1 states, N controls, per-step cost and safety
/// values. States may be augmented (physical states followed by barrier
/// states); h_values always refer to the raw safety functions.
struct Trajectory {
  std::vector<Vec> states;                   // N+1
  std::vector<Vec> controls;                 // N
  std::vector<double> costs;                 // N+1: running 0..N-1, terminal
  std::vector<std::vector<double>> h_values; // N+1 rows, one per constraint

  int horizon() const { return static_cast<int>(controls.size()); }
};

struct Violation {
  int step = -1;
  int constraint = -1;
  double h = 0.0;
};

struct SafetyReport {
  bool safe = true;
  std::optional<Violation> first;
};

/// Rolls the controls through the dynamics starting from x0.
///
/// Controls are clamped to `limits` when given; the clamped values are the
/// ones stored. When `monitors` is non-empty, h_values is filled by
/// evaluating every monitor on the leading `physical_dim` coordinates of
/// each state (pass -1 to use the full state).
///
/// Throws DivergenceError if a non-finite or > 1e8 state appears, and
/// propagates BarrierDomainError / DynamicsDomainError from the dynamics.
Trajectory rollout(const DynamicsModel& dyn, const Vec& x0,
                   const std::vector<Vec>& controls,
                   const std::optional<ControlLimits>& limits = std::nullopt,
                   const SafetySet& monitors = {}, int physical_dim = -1);

/// True iff h > 0 for every step and every constraint; otherwise reports
/// the first violation in (step, constraint) order.
SafetyReport is_safe(const Trajectory& traj);

}  // namespace safeddp
