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

// Independent numeric oracles used by the test suites. Everything here is
// deliberately dumb and slow: finite differences, explicit Riccati
// recursions, brute-force sums. None of it shares code with the library
// paths it checks.

#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "safeddp/cost.hpp"
#include "safeddp/dynamics.hpp"
#include "safeddp/safety.hpp"

namespace oracles {

using safeddp::Mat;
using safeddp::Vec;

// Corrected relative error: ignores differences below absTol.
inline double rel_error(double a, double b, double abs_tol = 1e-9) {
  const double num = std::max(0.0, std::abs(a - b) - abs_tol);
  const double den = std::abs(a) + std::abs(b) + abs_tol;
  return num / den;
}

inline double max_rel_error(const Mat& a, const Mat& b,
                            double abs_tol = 1e-9) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, rel_error(a(i, j), b(i, j), abs_tol));
    }
  }
  return worst;
}

// Central-difference Jacobians of a dynamics step.
inline void fd_jacobians(const safeddp::DynamicsModel& dyn, int k,
                         const Vec& x, const Vec& u, Mat& fx, Mat& fu,
                         double eps = 1e-6) {
  const int n = dyn.state_dim(), m = dyn.control_dim();
  fx.resize(n, n);
  fu.resize(n, m);
  for (int j = 0; j < n; ++j) {
    Vec xp = x, xm = x;
    const double d = eps * (1.0 + std::abs(x[j]));
    xp[j] += d;
    xm[j] -= d;
    fx.col(j) = (dyn.step(k, xp, u) - dyn.step(k, xm, u)) / (2.0 * d);
  }
  for (int j = 0; j < m; ++j) {
    Vec up = u, um = u;
    const double d = eps * (1.0 + std::abs(u[j]));
    up[j] += d;
    um[j] -= d;
    fu.col(j) = (dyn.step(k, x, up) - dyn.step(k, x, um)) / (2.0 * d);
  }
}

// Central-difference gradient / Hessian of a safety function.
inline Vec fd_gradient(const safeddp::SafetyFunction& h, int k, const Vec& x,
                       double eps = 1e-6) {
  Vec g(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    const double d = eps * (1.0 + std::abs(x[j]));
    xp[j] += d;
    xm[j] -= d;
    g[j] = (h.eval(k, xp) - h.eval(k, xm)) / (2.0 * d);
  }
  return g;
}

inline Mat fd_hessian(const safeddp::SafetyFunction& h, int k, const Vec& x,
                      double eps = 1e-5) {
  Mat H(x.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    const double d = eps * (1.0 + std::abs(x[j]));
    xp[j] += d;
    xm[j] -= d;
    H.col(j) = (fd_gradient(h, k, xp, eps) - fd_gradient(h, k, xm, eps)) /
               (2.0 * d);
  }
  return H;
}

// Central differences of a scalar function, in long double for headroom.
inline double fd_derivative(const std::function<long double(long double)>& f,
                            double h, double eps) {
  const long double d = eps;
  return static_cast<double>((f(h + d) - f(h - d)) / (2.0L * d));
}

inline double fd_second_derivative(
    const std::function<long double(long double)>& f, double h, double eps) {
  const long double d = eps;
  return static_cast<double>((f(h + d) - 2.0L * f(h) + f(h - d)) / (d * d));
}

// Finite-horizon discrete LQR for the cost convention without 1/2 factors:
//   J = sum_{k=0}^{N-1} x^T Q x + u^T R u  +  x_N^T S x_N,
//   x_{k+1} = A x_k + B u_k.
struct RiccatiSolution {
  std::vector<Mat> P;      // N+1 value matrices
  std::vector<Mat> gains;  // N feedback gains, u_k = -gains[k] * x_k
  double optimal_cost(const Vec& x0) const { return x0.dot(P.front() * x0); }
};

inline RiccatiSolution solve_riccati(const Mat& A, const Mat& B, const Mat& Q,
                                     const Mat& R, const Mat& S, int N) {
  RiccatiSolution sol;
  sol.P.resize(N + 1);
  sol.gains.resize(N);
  sol.P[N] = S;
  for (int k = N - 1; k >= 0; --k) {
    const Mat& Pn = sol.P[k + 1];
    const Mat BtP = B.transpose() * Pn;
    const Mat G = (R + BtP * B).inverse() * (BtP * A);
    sol.gains[k] = G;
    sol.P[k] = Q + A.transpose() * Pn * A - A.transpose() * Pn * B * G;
    sol.P[k] = 0.5 * (sol.P[k] + sol.P[k].transpose());
  }
  return sol;
}

// Linear test system x' = A x + B u, used by solver oracle tests.
class LinearModel final : public safeddp::DynamicsModel {
 public:
  LinearModel(Mat A, Mat B, double dt = 1.0)
      : A_(std::move(A)), B_(std::move(B)), dt_(dt) {}

  int state_dim() const override { return static_cast<int>(A_.rows()); }
  int control_dim() const override { return static_cast<int>(B_.cols()); }
  double dt() const override { return dt_; }

  Vec step(int, const Vec& x, const Vec& u) const override {
    return A_ * x + B_ * u;
  }
  void jacobians(int, const Vec&, const Vec&, Mat& fx,
                 Mat& fu) const override {
    fx = A_;
    fu = B_;
  }

  const Mat& A() const { return A_; }
  const Mat& B() const { return B_; }

 private:
  Mat A_, B_;
  double dt_;
};

inline Vec random_vec(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

inline Mat random_mat(std::mt19937_64& rng, int rows, int cols,
                      double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  }
  return m;
}

inline Mat random_psd(std::mt19937_64& rng, int n, double scale = 1.0) {
  const Mat m = random_mat(rng, n, n, scale);
  return m * m.transpose();
}

}  // namespace oracles
