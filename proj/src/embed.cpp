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

#include "safeddp/embed.hpp"

#include <stdexcept>

namespace safeddp {

AugmentedDynamics::AugmentedDynamics(std::shared_ptr<const DynamicsModel> base,
                                     std::vector<BarrierSpec> specs)
    : base_(std::move(base)), specs_(std::move(specs)) {
  if (!base_) throw std::invalid_argument("embed: null base model");
  if (specs_.empty()) throw std::invalid_argument("embed: no barrier specs");
  phys_dim_ = base_->state_dim();
  aug_dim_ = phys_dim_ + static_cast<int>(specs_.size());
  for (const auto& spec : specs_) {
    if (spec.constraints.empty()) {
      throw std::invalid_argument("embed: barrier spec without constraints");
    }
    if (spec.family == BarrierFamily::tolerant) spec.params.validate();
  }
}

Vec AugmentedDynamics::augment_state(int k, const Vec& x_physical) const {
  if (x_physical.size() != phys_dim_) {
    throw std::invalid_argument("augment_state: dimension mismatch");
  }
  Vec out(aug_dim_);
  out.head(phys_dim_) = x_physical;
  for (std::size_t g = 0; g < specs_.size(); ++g) {
    out[phys_dim_ + static_cast<int>(g)] =
        barrier_state_of(specs_[g], k, x_physical);
  }
  return out;
}

Vec AugmentedDynamics::step(int k, const Vec& x, const Vec& u) const {
  const Vec xp = x.head(phys_dim_);
  Vec next_p = base_->step(k, xp, u);
  Vec out(aug_dim_);
  out.head(phys_dim_) = next_p;
  for (std::size_t g = 0; g < specs_.size(); ++g) {
    out[phys_dim_ + static_cast<int>(g)] =
        barrier_state_of(specs_[g], k + 1, next_p);
  }
  return out;
}

void AugmentedDynamics::jacobians(int k, const Vec& x, const Vec& u, Mat& fx,
                                  Mat& fu) const {
  const Vec xp = x.head(phys_dim_);
  Mat bfx(phys_dim_, phys_dim_), bfu(phys_dim_, base_->control_dim());
  base_->jacobians(k, xp, u, bfx, bfu);
  const Vec next_p = base_->step(k, xp, u);

  fx.setZero(aug_dim_, aug_dim_);
  fu.setZero(aug_dim_, base_->control_dim());
  fx.topLeftCorner(phys_dim_, phys_dim_) = bfx;
  fu.topRows(phys_dim_) = bfu;

  // d beta'_g / d x_k = sum_i B'(h_i) h_x(next) * f_x; the barrier columns
  // stay zero because beta' has no dependence on the incoming beta.
  for (std::size_t g = 0; g < specs_.size(); ++g) {
    const BarrierSpec& spec = specs_[g];
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(phys_dim_);
    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
      const double h = spec.constraints[i]->eval(k + 1, next_p);
      double d1 = 0.0, d2 = 0.0;
      try {
        barrier_derivs(spec.family, spec.params, h, d1, d2);
      } catch (const BarrierDomainError&) {
        throw BarrierDomainError(h, k + 1, static_cast<int>(i));
      }
      row.noalias() +=
          d1 * spec.constraints[i]->gradient(k + 1, next_p).transpose();
    }
    const int r = phys_dim_ + static_cast<int>(g);
    fx.row(r).head(phys_dim_).noalias() = row * bfx;
    fu.row(r).noalias() = row * bfu;
  }
}

std::shared_ptr<AugmentedDynamics> embed(
    std::shared_ptr<const DynamicsModel> base,
    std::vector<BarrierSpec> specs) {
  return std::make_shared<AugmentedDynamics>(std::move(base),
                                             std::move(specs));
}

}  // namespace safeddp
