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

#include "safeddp/cost.hpp"

#include <stdexcept>

namespace safeddp {

namespace {

void require_symmetric(const Mat& m, const char* name) {
  if (m.rows() != m.cols() || (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument(std::string(name) + " must be symmetric");
  }
}

void require_psd(const Mat& m, const char* name) {
  require_symmetric(m, name);
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument(std::string(name) +
                                " must be positive semi-definite");
  }
}

void require_pd(const Mat& m, const char* name) {
  require_symmetric(m, name);
  Eigen::LLT<Mat> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(std::string(name) +
                                " must be positive definite");
  }
}

}  // namespace

QuadraticCost::QuadraticCost(Mat Q, Mat R, Mat S, std::vector<Vec> refs)
    : Q_(std::move(Q)), R_(std::move(R)), S_(std::move(S)),
      refs_(std::move(refs)) {
  require_psd(Q_, "Q");
  require_pd(R_, "R");
  require_psd(S_, "S");
  if (refs_.empty()) throw std::invalid_argument("reference is empty");
  for (const Vec& r : refs_) {
    if (r.size() != Q_.rows()) {
      throw std::invalid_argument("reference dimension mismatch");
    }
  }
}

double QuadraticCost::running(int k, const Vec& x, const Vec& u) const {
  const Vec dx = x - ref(k);
  return dx.dot(Q_ * dx) + u.dot(R_ * u);
}

double QuadraticCost::terminal(const Vec& x) const {
  const Vec dx = x - refs_.back();
  return dx.dot(S_ * dx);
}

void QuadraticCost::running_expansion(int k, const Vec& x, const Vec& u,
                                      Vec& lx, Vec& lu, Mat& lxx, Mat& luu,
                                      Mat& lxu) const {
  const Vec dx = x - ref(k);
  lx.noalias() = 2.0 * (Q_ * dx);
  lu.noalias() = 2.0 * (R_ * u);
  lxx = 2.0 * Q_;
  luu = 2.0 * R_;
  lxu.setZero(Q_.rows(), R_.rows());
}

void QuadraticCost::terminal_expansion(const Vec& x, Vec& phix,
                                       Mat& phixx) const {
  const Vec dx = x - refs_.back();
  phix.noalias() = 2.0 * (S_ * dx);
  phixx = 2.0 * S_;
}

double total_cost(const Trajectory& traj, const CostModel& cost) {
  const int n = traj.horizon();
  if (static_cast<int>(traj.states.size()) != n + 1) {
    throw std::invalid_argument("total_cost: inconsistent trajectory");
  }
  if (!traj.states.empty() &&
      traj.states.front().size() != cost.state_dim()) {
    throw std::invalid_argument("total_cost: state dimension mismatch");
  }
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    total += cost.running(k, traj.states[k], traj.controls[k]);
  }
  total += cost.terminal(traj.states.back());
  return total;
}

double evaluate_costs(Trajectory& traj, const CostModel& cost) {
  const int n = traj.horizon();
  traj.costs.assign(n + 1, 0.0);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    traj.costs[k] = cost.running(k, traj.states[k], traj.controls[k]);
    total += traj.costs[k];
  }
  traj.costs[n] = cost.terminal(traj.states.back());
  total += traj.costs[n];
  return total;
}

}  // namespace safeddp
