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

#pragma once

#include <array>
#include <vector>

#include "povmc/povm.hpp"
#include "povmc/synthesis.hpp"

namespace povmc::demos {

/// Symmetric three-outcome measurement with projection axes at 0 and +-60
/// degrees in real space (120 degrees apart on the Poincare sphere).
struct TrineDemo {
  PovmSet povm;
  KrausSet kraus;    // M_i = V_i sqrt(F_i) with trine_exit_unitaries()
  CascadePlan plan;  // published module settings, exits fitted to `kraus`
};

/// F_1 = (2/3) diag(1, 0), F_2,3 = (1/6) [[1, +-sqrt3], [+-sqrt3, 3]].
std::vector<Matrix2> trine_elements();

/// V_1 = I, V_2 = (1/2)[[1, -sqrt3], [sqrt3, 1]], V_3 = (1/2)[[1, sqrt3], [-sqrt3, 1]].
std::vector<Matrix2> trine_exit_unitaries();

/// Two modules: theta = arccos(sqrt(2/3)), phi = pi/2 behind the identity,
/// then theta = 0, phi = pi/2 behind a pi/4 basis rotation. Exit unitaries
/// are left at the identity.
CascadePlan trine_settings();

TrineDemo trine_povm();

/// Angles (radians) of the two polarizations to be discriminated.
struct EkertParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Unambiguous discrimination of the linear polarizations at alpha and beta:
/// outcome 1 excludes alpha, outcome 2 excludes beta, outcome 3 is
/// inconclusive.
struct EkertDemo {
  PovmSet povm;
  KrausSet kraus;    // M_i = sqrt(F_i); conclusive outputs are orthogonal to
                     // the excluded input
  CascadePlan plan;  // published settings, exits fitted to `kraus`
};

/// F_1 and F_2 in closed form. Throws DomainError outside the valid domain.
std::array<Matrix2, 2> ekert_conclusive_elements(const EkertParams& params);

/// Module I: basis rotation alpha, D = diag(0, sqrt(1/(1 + cos(beta-alpha))));
/// module II: basis rotation alpha', D = diag(0, 1). The zero entry comes
/// first, as published. Throws DomainError unless cos(beta - alpha) > 0 and
/// alpha != beta.
CascadePlan ekert_settings(const EkertParams& params);

EkertDemo ekert_povm(const EkertParams& params);

}  // namespace povmc::demos
