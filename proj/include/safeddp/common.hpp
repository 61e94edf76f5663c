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

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace safeddp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Any state component beyond this magnitude aborts a rollout as divergent.
inline constexpr double kStateMagnitudeLimit = 1e8;

/// Component-wise control box. All shipped problems use a uniform box,
/// so a scalar pair is enough.
struct ControlLimits {
  double lo = -1.0;
  double hi = 1.0;

  Vec clamp(const Vec& u) const { return u.cwiseMax(lo).cwiseMin(hi); }
};

/// Rollout produced a non-finite or absurdly large state.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(int step)
      : std::runtime_error("state diverged at step " + std::to_string(step)),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// A classical (inverse/log) barrier was evaluated outside its domain h > 0.
class BarrierDomainError : public std::runtime_error {
 public:
  BarrierDomainError(double h, int step = -1, int constraint = -1)
      : std::runtime_error("barrier domain violation (h = " +
                           std::to_string(h) + ") at step " +
                           std::to_string(step) + ", constraint " +
                           std::to_string(constraint)),
        h_(h),
        step_(step),
        constraint_(constraint) {}
  double h() const { return h_; }
  int step() const { return step_; }
  int constraint() const { return constraint_; }

 private:
  double h_;
  int step_;
  int constraint_;
};

/// Dynamics left the region where the model is valid (e.g. gimbal lock).
class DynamicsDomainError : public std::runtime_error {
 public:
  explicit DynamicsDomainError(const std::string& what)
      : std::runtime_error(what) {}
};

inline bool all_finite(const Vec& v) { return v.allFinite(); }

}  // namespace safeddp
