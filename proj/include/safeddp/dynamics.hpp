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

#include "safeddp/common.hpp"

namespace safeddp {

/// Discrete-time dynamics x_{k+1} = f(k, x_k, u_k) with first derivatives.
///
/// Implementations must be deterministic: identical inputs give identical
/// outputs. Jacobians are expected to match central finite differences of
/// step() to a relative error below 1e-5.
class DynamicsModel {
 public:
  virtual ~DynamicsModel() = default;

  virtual int state_dim() const = 0;
  virtual int control_dim() const = 0;
  virtual double dt() const = 0;

  virtual Vec step(int k, const Vec& x, const Vec& u) const = 0;

  /// fx: state_dim x state_dim, fu: state_dim x control_dim.
  virtual void jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                         Mat& fu) const = 0;
};

}  // namespace safeddp
