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

#include <memory>
#include <vector>

#include "safeddp/barriers.hpp"
#include "safeddp/dynamics.hpp"

namespace safeddp {

/// Safety-embedded dynamics: the base model augmented with one barrier
/// state per BarrierSpec.
///
/// Augmented state layout: [x_physical ; beta_1 ... beta_G]. The step is
///   x'    = f(k, x, u)
///   beta'_g = sum_i B_g(h_i(k+1, x'))
/// so a barrier coordinate never depends on its previous value, and the
/// physical coordinates are exactly those of the base model.
class AugmentedDynamics final : public DynamicsModel {
 public:
  AugmentedDynamics(std::shared_ptr<const DynamicsModel> base,
                    std::vector<BarrierSpec> specs);

  int state_dim() const override { return aug_dim_; }
  int control_dim() const override { return base_->control_dim(); }
  double dt() const override { return base_->dt(); }
  int physical_dim() const { return phys_dim_; }
  int num_barrier_states() const { return aug_dim_ - phys_dim_; }

  const DynamicsModel& base() const { return *base_; }
  const std::vector<BarrierSpec>& barrier_specs() const { return specs_; }

  /// [x ; beta(k, x)] for a physical state x. For inverse/log families an
  /// unsafe x is a hard error (BarrierDomainError).
  Vec augment_state(int k, const Vec& x_physical) const;

  Vec step(int k, const Vec& x, const Vec& u) const override;
  void jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                 Mat& fu) const override;

 private:
  std::shared_ptr<const DynamicsModel> base_;
  std::vector<BarrierSpec> specs_;
  int phys_dim_;
  int aug_dim_;
};

/// Convenience factory mirroring the augmentation operation.
std::shared_ptr<AugmentedDynamics> embed(
    std::shared_ptr<const DynamicsModel> base, std::vector<BarrierSpec> specs);

}  // namespace safeddp
