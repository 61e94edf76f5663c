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

#include "safeddp/dynamics.hpp"

namespace safeddp {

/// Differential-drive robot, explicit Euler.
/// State (p_x, p_y, gamma): position [m] and heading [rad].
/// Controls (v, omega): forward speed [m/s] and turn rate [rad/s].
class Unicycle final : public DynamicsModel {
 public:
  explicit Unicycle(double dt);

  int state_dim() const override { return 3; }
  int control_dim() const override { return 2; }
  double dt() const override { return dt_; }

  Vec step(int k, const Vec& x, const Vec& u) const override;
  void jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                 Mat& fu) const override;

 private:
  double dt_;
};

/// 12-state Euler-angle quadrotor, explicit Euler.
///
/// State (x, y, z, phi, theta, psi, vx, vy, vz, p, q, r):
/// inertial position [m], roll/pitch/yaw [rad], inertial velocity [m/s],
/// body rates [rad/s]. Controls (F, tau_phi, tau_theta, tau_psi): total
/// thrust [N] and body torques [N m]. Hover is a fixed point at F = m*g.
///
/// Throws DynamicsDomainError when |theta| >= pi/2 - 1e-3 (Euler-angle
/// kinematics become singular).
class Quadrotor12 final : public DynamicsModel {
 public:
  struct Params {
    double mass = 1.0;
    double gravity = 9.81;
    double ixx = 0.01;
    double iyy = 0.01;
    double izz = 0.02;
  };

  explicit Quadrotor12(double dt) : Quadrotor12(dt, Params{}) {}
  Quadrotor12(double dt, Params params);

  int state_dim() const override { return 12; }
  int control_dim() const override { return 4; }
  double dt() const override { return dt_; }
  const Params& params() const { return params_; }
  double hover_thrust() const { return params_.mass * params_.gravity; }

  Vec step(int k, const Vec& x, const Vec& u) const override;
  void jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                 Mat& fu) const override;

 private:
  double dt_;
  Params params_;
};

/// n independent unicycles stacked into one system. Agent a occupies state
/// slots [3a, 3a+2] and control slots [2a, 2a+1]; cross-agent Jacobian
/// blocks are exactly zero.
class UnicycleTeam final : public DynamicsModel {
 public:
  UnicycleTeam(int n_agents, double dt);

  int state_dim() const override { return 3 * n_agents_; }
  int control_dim() const override { return 2 * n_agents_; }
  double dt() const override { return dt_; }
  int n_agents() const { return n_agents_; }

  Vec step(int k, const Vec& x, const Vec& u) const override;
  void jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                 Mat& fu) const override;

 private:
  int n_agents_;
  double dt_;
  Unicycle agent_;
};

}  // namespace safeddp
