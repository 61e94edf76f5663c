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

#include "safeddp/barriers.hpp"

#include <cmath>
#include <stdexcept>

namespace safeddp {

std::string to_string(BarrierFamily family) {
  switch (family) {
    case BarrierFamily::inverse:  return "inverse";
    case BarrierFamily::log:      return "log";
    case BarrierFamily::tolerant: return "tolerant";
  }
  return "unknown";
}

BarrierFamily barrier_family_from_string(const std::string& name) {
  if (name == "inverse") return BarrierFamily::inverse;
  if (name == "log") return BarrierFamily::log;
  if (name == "tolerant") return BarrierFamily::tolerant;
  throw std::invalid_argument("unknown barrier family: " + name);
}

void TolerantParams::validate() const {
  if (p < 0.0 || m < 0.0) {
    throw std::invalid_argument("tolerant barrier: p and m must be >= 0");
  }
  if (c1 <= 0.0 || c2 <= 0.0) {
    throw std::invalid_argument("tolerant barrier: c1 and c2 must be > 0");
  }
  if (p + m <= 0.0) {
    throw std::invalid_argument("tolerant barrier: p + m must be positive");
  }
}

namespace {

// 1/(1 + e^z) without overflow for large |z|.
double stable_logistic(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

// log(1 + e^{-z})/c without overflow; exact identity for z < 0.
double stable_softplus(double z, double c) {
  if (z >= 0.0) return std::log1p(std::exp(-z)) / c;
  return (-z + std::log1p(std::exp(z))) / c;
}

}  // namespace

double barrier_value(BarrierFamily family, const TolerantParams& params,
                     double h) {
  switch (family) {
    case BarrierFamily::inverse:
      if (h <= 0.0) throw BarrierDomainError(h);
      return 1.0 / h;
    case BarrierFamily::log:
      if (h <= 0.0) throw BarrierDomainError(h);
      // -log(h/(1+h)): positive, decreasing, -> 0 as h -> inf.
      return std::log1p(h) - std::log(h);
    case BarrierFamily::tolerant: {
      const double sig = stable_logistic(params.c1 * h);
      const double sp = stable_softplus(params.c2 * h, params.c2);
      return params.p * sig + params.m * sp;
    }
  }
  throw std::logic_error("unreachable barrier family");
}

void barrier_derivs(BarrierFamily family, const TolerantParams& params,
                    double h, double& d1, double& d2) {
  switch (family) {
    case BarrierFamily::inverse:
      if (h <= 0.0) throw BarrierDomainError(h);
      d1 = -1.0 / (h * h);
      d2 = 2.0 / (h * h * h);
      return;
    case BarrierFamily::log:
      if (h <= 0.0) throw BarrierDomainError(h);
      d1 = 1.0 / (1.0 + h) - 1.0 / h;
      d2 = 1.0 / (h * h) - 1.0 / ((1.0 + h) * (1.0 + h));
      return;
    case BarrierFamily::tolerant: {
      const double sig = stable_logistic(params.c1 * h);
      const double s2 = stable_logistic(params.c2 * h);
      d1 = params.p * params.c1 * sig * (sig - 1.0) - params.m * s2;
      d2 = params.p * params.c1 * params.c1 * sig * (sig - 1.0) *
               (2.0 * sig - 1.0) +
           params.m * params.c2 * s2 * (1.0 - s2);
      return;
    }
  }
  throw std::logic_error("unreachable barrier family");
}

double barrier_state_of(const BarrierSpec& spec, int k, const Vec& x) {
  double beta = 0.0;
  for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
    const double h = spec.constraints[i]->eval(k, x);
    try {
      beta += barrier_value(spec.family, spec.params, h);
    } catch (const BarrierDomainError&) {
      throw BarrierDomainError(h, k, static_cast<int>(i));
    }
  }
  return beta;
}

Mat barrier_hessian_term(const BarrierSpec& spec, int k, const Vec& x) {
  Mat H = Mat::Zero(x.size(), x.size());
  if (spec.weight < 0.0) {
    throw std::invalid_argument("barrier weight must be >= 0");
  }
  for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
    const double h = spec.constraints[i]->eval(k, x);
    double d1 = 0.0, d2 = 0.0;
    try {
      barrier_derivs(spec.family, spec.params, h, d1, d2);
    } catch (const BarrierDomainError&) {
      throw BarrierDomainError(h, k, static_cast<int>(i));
    }
    const Vec g = spec.constraints[i]->gradient(k, x);
    H.noalias() += (spec.weight * d1 * d1) * (g * g.transpose());
  }
  return H;
}

}  // namespace safeddp
