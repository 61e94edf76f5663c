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

#include <string>

#include "safeddp/common.hpp"
#include "safeddp/safety.hpp"

namespace safeddp {

enum class BarrierFamily { inverse, log, tolerant };

std::string to_string(BarrierFamily family);
BarrierFamily barrier_family_from_string(const std::string& name);

/// Parameters of the tolerant barrier
///   B(h) = p * sigmoid(h) + m * softplus(h)
/// with sigmoid(h) = 1/(1 + e^{c1 h}) and softplus(h) = log(1 + e^{-c2 h})/c2.
///
/// p is the height of the sigmoid step at the safe-set boundary; m is the
/// asymptotic slope of the barrier inside the unsafe region; c1 and c2
/// control the sharpness of the two terms.
struct TolerantParams {
  double p = 1.0;
  double m = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;

  /// Throws std::invalid_argument on p<0, m<0, c<=0 or p+m == 0.
  void validate() const;
};

/// B(h). Inverse: 1/h. Log: -log(h/(1+h)). Tolerant: as above.
/// Inverse/log throw BarrierDomainError at h <= 0; tolerant is finite and
/// smooth for all real h.
double barrier_value(BarrierFamily family, const TolerantParams& params,
                     double h);

/// Analytic dB/dh and d^2B/dh^2.
void barrier_derivs(BarrierFamily family, const TolerantParams& params,
                    double h, double& d1, double& d2);

/// One barrier state: a barrier family applied to a group of safety
/// functions, with the values summed. `weight` is the running-cost penalty
/// placed on this barrier state.
struct BarrierSpec {
  BarrierFamily family = BarrierFamily::tolerant;
  TolerantParams params;  // tolerant only; ignored by inverse/log
  SafetySet constraints;
  double weight = 0.0;
};

/// beta(k, x) = sum_i B(h_i(k, x)). Propagates BarrierDomainError with the
/// offending constraint index.
double barrier_state_of(const BarrierSpec& spec, int k, const Vec& x);

/// Gauss-Newton curvature of the barrier state over the physical state:
///   sum_i weight * (dB/dh)^2 * h_x^T h_x     (always PSD)
Mat barrier_hessian_term(const BarrierSpec& spec, int k, const Vec& x);

}  // namespace safeddp
