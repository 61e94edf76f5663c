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

#include "safeddp/common.hpp"

namespace safeddp {

/// Scalar safety function h(k, x); the safe set is {x | h > 0}.
///
/// h is evaluated on the physical state. For time-varying constraints the
/// step index k maps to time t = k * dt, which the implementation captures
/// at construction.
class SafetyFunction {
 public:
  virtual ~SafetyFunction() = default;

  virtual double eval(int k, const Vec& x) const = 0;
  /// dh/dx as a column vector of the full state dimension.
  virtual Vec gradient(int k, const Vec& x) const = 0;
  virtual Mat hessian(int k, const Vec& x) const = 0;
  virtual bool time_varying() const { return false; }
};

using SafetyFunctionPtr = std::shared_ptr<const SafetyFunction>;
using SafetySet = std::vector<SafetyFunctionPtr>;

}  // namespace safeddp
