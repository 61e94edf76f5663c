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

#include "safeddp/models.hpp"

#include <cmath>
#include <stdexcept>

namespace safeddp {

Unicycle::Unicycle(double dt) : dt_(dt) {
  if (dt <= 0.0) throw std::invalid_argument("Unicycle: dt must be > 0");
}

Vec Unicycle::step(int, const Vec& x, const Vec& u) const {
  const double gamma = x[2], v = u[0], omega = u[1];
  Vec next(3);
  next[0] = x[0] + dt_ * v * std::cos(gamma);
  next[1] = x[1] + dt_ * v * std::sin(gamma);
  next[2] = x[2] + dt_ * omega;
  return next;
}

void Unicycle::jacobians(int, const Vec& x, const Vec& u, Mat& fx,
                         Mat& fu) const {
  const double gamma = x[2], v = u[0];
  const double c = std::cos(gamma), s = std::sin(gamma);
  fx = Mat::Identity(3, 3);
  fx(0, 2) = -dt_ * v * s;
  fx(1, 2) = dt_ * v * c;
  fu.setZero(3, 2);
  fu(0, 0) = dt_ * c;
  fu(1, 0) = dt_ * s;
  fu(2, 1) = dt_;
}

Quadrotor12::Quadrotor12(double dt, Params params)
    : dt_(dt), params_(params) {
  if (dt <= 0.0) throw std::invalid_argument("Quadrotor12: dt must be > 0");
  if (params.mass <= 0.0 || params.ixx <= 0.0 || params.iyy <= 0.0 ||
      params.izz <= 0.0) {
    throw std::invalid_argument("Quadrotor12: mass and inertia must be > 0");
  }
}

namespace {
constexpr double kGimbalMargin = 1e-3;
}

Vec Quadrotor12::step(int, const Vec& x, const Vec& u) const {
  const double phi = x[3], theta = x[4], psi = x[5];
  if (std::abs(theta) >= M_PI / 2.0 - kGimbalMargin) {
    throw DynamicsDomainError("quadrotor pitch too close to +-pi/2");
  }
  const double vx = x[6], vy = x[7], vz = x[8];
  const double p = x[9], q = x[10], r = x[11];
  const double F = u[0];

  const double cphi = std::cos(phi), sphi = std::sin(phi);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double cpsi = std::cos(psi), spsi = std::sin(psi);
  const double tth = sth / cth;

  const double fm = F / params_.mass;
  const double ax = fm * (cphi * sth * cpsi + sphi * spsi);
  const double ay = fm * (cphi * sth * spsi - sphi * cpsi);
  const double az = fm * (cphi * cth) - params_.gravity;

  const double a1 = (params_.iyy - params_.izz) / params_.ixx;
  const double a2 = (params_.izz - params_.ixx) / params_.iyy;
  const double a3 = (params_.ixx - params_.iyy) / params_.izz;

  Vec next(12);
  next[0] = x[0] + dt_ * vx;
  next[1] = x[1] + dt_ * vy;
  next[2] = x[2] + dt_ * vz;
  next[3] = phi + dt_ * (p + q * sphi * tth + r * cphi * tth);
  next[4] = theta + dt_ * (q * cphi - r * sphi);
  next[5] = psi + dt_ * (q * sphi + r * cphi) / cth;
  next[6] = vx + dt_ * ax;
  next[7] = vy + dt_ * ay;
  next[8] = vz + dt_ * az;
  next[9] = p + dt_ * (a1 * q * r + u[1] / params_.ixx);
  next[10] = q + dt_ * (a2 * p * r + u[2] / params_.iyy);
  next[11] = r + dt_ * (a3 * p * q + u[3] / params_.izz);
  return next;
}

void Quadrotor12::jacobians(int, const Vec& x, const Vec& u, Mat& fx,
                            Mat& fu) const {
  const double phi = x[3], theta = x[4], psi = x[5];
  if (std::abs(theta) >= M_PI / 2.0 - kGimbalMargin) {
    throw DynamicsDomainError("quadrotor pitch too close to +-pi/2");
  }
  const double p = x[9], q = x[10], r = x[11];
  const double F = u[0];

  const double cphi = std::cos(phi), sphi = std::sin(phi);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double cpsi = std::cos(psi), spsi = std::sin(psi);
  const double tth = sth / cth;
  const double sec2 = 1.0 / (cth * cth);

  const double fm = F / params_.mass;
  const double a1 = (params_.iyy - params_.izz) / params_.ixx;
  const double a2 = (params_.izz - params_.ixx) / params_.iyy;
  const double a3 = (params_.ixx - params_.iyy) / params_.izz;

  fx = Mat::Identity(12, 12);
  fu.setZero(12, 4);

  // positions <- velocities
  fx(0, 6) = dt_;
  fx(1, 7) = dt_;
  fx(2, 8) = dt_;

  // roll kinematics
  fx(3, 3) += dt_ * tth * (q * cphi - r * sphi);
  fx(3, 4) = dt_ * (q * sphi + r * cphi) * sec2;
  fx(3, 9) = dt_;
  fx(3, 10) = dt_ * sphi * tth;
  fx(3, 11) = dt_ * cphi * tth;

  // pitch kinematics
  fx(4, 3) = dt_ * (-q * sphi - r * cphi);
  fx(4, 10) = dt_ * cphi;
  fx(4, 11) = -dt_ * sphi;

  // yaw kinematics
  fx(5, 3) = dt_ * (q * cphi - r * sphi) / cth;
  fx(5, 4) = dt_ * (q * sphi + r * cphi) * tth / cth;
  fx(5, 10) = dt_ * sphi / cth;
  fx(5, 11) = dt_ * cphi / cth;

  // vx
  fx(6, 3) = dt_ * fm * (-sphi * sth * cpsi + cphi * spsi);
  fx(6, 4) = dt_ * fm * (cphi * cth * cpsi);
  fx(6, 5) = dt_ * fm * (-cphi * sth * spsi + sphi * cpsi);
  fu(6, 0) = dt_ * (cphi * sth * cpsi + sphi * spsi) / params_.mass;

  // vy
  fx(7, 3) = dt_ * fm * (-sphi * sth * spsi - cphi * cpsi);
  fx(7, 4) = dt_ * fm * (cphi * cth * spsi);
  fx(7, 5) = dt_ * fm * (cphi * sth * cpsi + sphi * spsi);
  fu(7, 0) = dt_ * (cphi * sth * spsi - sphi * cpsi) / params_.mass;

  // vz
  fx(8, 3) = dt_ * fm * (-sphi * cth);
  fx(8, 4) = dt_ * fm * (-cphi * sth);
  fu(8, 0) = dt_ * (cphi * cth) / params_.mass;

  // body rates
  fx(9, 10) = dt_ * a1 * r;
  fx(9, 11) = dt_ * a1 * q;
  fu(9, 1) = dt_ / params_.ixx;
  fx(10, 9) = dt_ * a2 * r;
  fx(10, 11) = dt_ * a2 * p;
  fu(10, 2) = dt_ / params_.iyy;
  fx(11, 9) = dt_ * a3 * q;
  fx(11, 10) = dt_ * a3 * p;
  fu(11, 3) = dt_ / params_.izz;
}

UnicycleTeam::UnicycleTeam(int n_agents, double dt)
    : n_agents_(n_agents), dt_(dt), agent_(dt) {
  if (n_agents <= 0) {
    throw std::invalid_argument("UnicycleTeam: need at least one agent");
  }
}

Vec UnicycleTeam::step(int k, const Vec& x, const Vec& u) const {
  Vec next(state_dim());
  for (int a = 0; a < n_agents_; ++a) {
    next.segment(3 * a, 3) = agent_.step(k, x.segment(3 * a, 3),
                                         u.segment(2 * a, 2));
  }
  return next;
}

void UnicycleTeam::jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                             Mat& fu) const {
  fx.setZero(state_dim(), state_dim());
  fu.setZero(state_dim(), control_dim());
  Mat afx(3, 3), afu(3, 2);
  for (int a = 0; a < n_agents_; ++a) {
    agent_.jacobians(k, x.segment(3 * a, 3), u.segment(2 * a, 2), afx, afu);
    fx.block(3 * a, 3 * a, 3, 3) = afx;
    fu.block(3 * a, 2 * a, 3, 2) = afu;
  }
}

}  // namespace safeddp
