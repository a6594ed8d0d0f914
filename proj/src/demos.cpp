// Copyright 2026 The povmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povmc/demos.hpp"

#include <cmath>
#include <numbers>

namespace povmc::demos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// (1 / (1 + cos(beta - alpha))) |x_perp><x_perp| for the polarization at x.
Matrix2 excluding(double x, double scale) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return scale * Matrix2(s * s, -s * c, -s * c, c * c);
}

}  // namespace

std::vector<Matrix2> trine_elements() {
  return {
      (2.0 / 3.0) * Matrix2::diag(1.0, 0.0),
      (1.0 / 6.0) * Matrix2(1.0, kSqrt3, kSqrt3, 3.0),
      (1.0 / 6.0) * Matrix2(1.0, -kSqrt3, -kSqrt3, 3.0),
  };
}

std::vector<Matrix2> trine_exit_unitaries() {
  return {
      Matrix2::identity(),
      0.5 * Matrix2(1.0, -kSqrt3, kSqrt3, 1.0),
      0.5 * Matrix2(1.0, kSqrt3, -kSqrt3, 1.0),
  };
}

CascadePlan trine_settings() {
  CascadePlan plan;
  ModuleSettings first;
  first.theta = std::acos(std::sqrt(2.0 / 3.0));
  first.phi = kPi / 2;
  first.pre_unitary = basis_rotation(0.0);
  ModuleSettings second;
  second.theta = 0.0;
  second.phi = kPi / 2;
  second.pre_unitary = basis_rotation(kPi / 4);
  plan.modules = {first, second};
  return plan;
}

TrineDemo trine_povm() {
  PovmSet povm = validate_povm(trine_elements());
  KrausSet kraus = kraus_from_povm(povm, trine_exit_unitaries());
  CascadePlan plan = fit_exit_unitaries(trine_settings(), kraus);
  return {std::move(povm), std::move(kraus), std::move(plan)};
}

std::array<Matrix2, 2> ekert_conclusive_elements(const EkertParams& params) {
  ekert_alpha_prime(params.alpha, params.beta);  // domain check
  const double c = std::cos(params.beta - params.alpha);
  const double scale = 1.0 / (1.0 + c);
  return {excluding(params.alpha, scale), excluding(params.beta, scale)};
}

CascadePlan ekert_settings(const EkertParams& params) {
  const double alpha_prime = ekert_alpha_prime(params.alpha, params.beta);
  const double c = std::cos(params.beta - params.alpha);

  CascadePlan plan;
  ModuleSettings first;
  first.theta = kPi / 2;
  first.phi = std::acos(std::sqrt(1.0 / (1.0 + c)));
  first.pre_unitary = basis_rotation(params.alpha);
  ModuleSettings second;
  second.theta = kPi / 2;
  second.phi = 0.0;
  second.pre_unitary = basis_rotation(alpha_prime);
  plan.modules = {first, second};
  return plan;
}

EkertDemo ekert_povm(const EkertParams& params) {
  const auto [f1, f2] = ekert_conclusive_elements(params);
  PovmSet povm = validate_povm({f1, f2, Matrix2::identity() - f1 - f2});
  KrausSet kraus = kraus_from_povm(povm);
  CascadePlan plan = fit_exit_unitaries(ekert_settings(params), kraus);
  return {std::move(povm), std::move(kraus), std::move(plan)};
}

}  // namespace povmc::demos
