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

#include <vector>

#include "safeddp/common.hpp"
#include "safeddp/trajectory.hpp"

namespace safeddp {

/// Stage/terminal cost with second-order expansions, as consumed by the
/// backward pass.
class CostModel {
 public:
  virtual ~CostModel() = default;

  virtual int state_dim() const = 0;
  virtual int control_dim() const = 0;

  virtual double running(int k, const Vec& x, const Vec& u) const = 0;
  virtual double terminal(const Vec& x) const = 0;

  virtual void running_expansion(int k, const Vec& x, const Vec& u, Vec& lx,
                                 Vec& lu, Mat& lxx, Mat& luu,
                                 Mat& lxu) const = 0;
  virtual void terminal_expansion(const Vec& x, Vec& phix,
                                  Mat& phixx) const = 0;
};

/// J = sum_k (x_k - r_k)^T Q (x_k - r_k) + u_k^T R u_k
///       + (x_N - r_N)^T S (x_N - r_N)
///
/// The reference is either a single goal state or a time-indexed sequence
/// of N+1 states. No 1/2 factors anywhere.
class QuadraticCost final : public CostModel {
 public:
  QuadraticCost(Mat Q, Mat R, Mat S, std::vector<Vec> refs);
  QuadraticCost(Mat Q, Mat R, Mat S, Vec ref)
      : QuadraticCost(std::move(Q), std::move(R), std::move(S),
                      std::vector<Vec>{std::move(ref)}) {}

  int state_dim() const override { return static_cast<int>(Q_.rows()); }
  int control_dim() const override { return static_cast<int>(R_.rows()); }

  const Mat& Q() const { return Q_; }
  const Mat& R() const { return R_; }
  const Mat& S() const { return S_; }
  const Vec& ref(int k) const {
    return refs_.size() == 1 ? refs_.front()
                             : refs_[static_cast<std::size_t>(k)];
  }

  double running(int k, const Vec& x, const Vec& u) const override;
  double terminal(const Vec& x) const override;
  void running_expansion(int k, const Vec& x, const Vec& u, Vec& lx, Vec& lu,
                         Mat& lxx, Mat& luu, Mat& lxu) const override;
  void terminal_expansion(const Vec& x, Vec& phix, Mat& phixx) const override;

 private:
  Mat Q_, R_, S_;
  std::vector<Vec> refs_;  // size 1 (fixed goal) or N+1 (tracking)
};

/// Sum of running costs plus the terminal cost. Does not touch traj.costs.
double total_cost(const Trajectory& traj, const CostModel& cost);

/// Fills traj.costs in place and returns the total.
double evaluate_costs(Trajectory& traj, const CostModel& cost);

}  // namespace safeddp
