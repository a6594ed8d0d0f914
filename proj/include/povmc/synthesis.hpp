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
#include <cstddef>
#include <span>
#include <vector>

#include "povmc/povm.hpp"
#include "povmc/qmath.hpp"

namespace povmc {

/// Settings of one five-beamsplitter module.
///
/// The module maps an incoming Jones vector psi to D1 * U * psi at its first
/// exit (followed by the exit unitary) and to D2 * U * psi at its
/// pass-through arm, with
///   D1 = diag(e^{i zeta} cos theta, cos phi),
///   D2 = diag(e^{i xi} sin theta, sin phi),
/// so that D1^dag D1 + D2^dag D2 = I for any angles.
struct ModuleSettings {
  double theta = 0.0;
  double phi = 0.0;
  double zeta = 0.0;
  double xi = 0.0;
  Matrix2 pre_unitary = Matrix2::identity();
  Matrix2 exit_unitary = Matrix2::identity();

  Matrix2 d1() const;
  Matrix2 d2() const;

  friend bool operator==(const ModuleSettings&, const ModuleSettings&) = default;
};

/// n - 1 chained modules realizing an n-outcome measurement. Outcome j < n
/// leaves through the first exit of module j, outcome n through the
/// pass-through arm of the last module after `final_exit_unitary`.
struct CascadePlan {
  std::vector<ModuleSettings> modules;
  Matrix2 final_exit_unitary = Matrix2::identity();

  std::size_t outcome_count() const { return modules.size() + 1; }

  friend bool operator==(const CascadePlan&, const CascadePlan&) = default;
};

/// Throws std::invalid_argument for an empty plan or angles outside
/// [0, pi/2], NotUnitary (indexed by module, final exit as index n - 1) for
/// non-unitary factors.
void validate_plan(const CascadePlan& plan, double tol = kValidationTol);

/// State of the compiler before module j is emitted.
struct SynthesisStep {
  Matrix2 residual_prefix;     // T_{j-1}
  Matrix2 effective_operator;  // T^+dag F_j T^+ on the support of T
  std::array<double, 2> eigenvalues{};  // cos^2 theta, cos^2 phi
};

struct SynthesisTrace {
  CascadePlan plan;
  std::vector<SynthesisStep> steps;  // one per module
  std::vector<Matrix2> prefixes;     // T_0 = I, T_1, ..., T_{n-1}
};

/// Compiles a Kraus set into module settings with phases zeta = xi = 0.
///
/// Module j diagonalizes the part of F_j that reaches it,
/// G_j = T^+dag F_j T^+ = U_j^dag diag(cos^2 theta, cos^2 phi) U_j, and passes
/// T_j = diag(sin theta, sin phi) U_j T_{j-1} on. Exit unitaries are chosen so
/// that the plan reproduces each M_j exactly, not only F_j.
CascadePlan synthesize_cascade(const KrausSet& kraus);

/// Same algorithm with the intermediate prefixes recorded. Throws
/// IncompleteSum unless sum M^dag M = I within kValidationTol;
/// EigenvalueOutOfRange and UnsupportedOperator guard against round-off.
SynthesisTrace synthesize_cascade_traced(std::span<const Matrix2> kraus);

/// M_j = V_j D1_j U_j T_{j-1} for j < n and M_n = V_n T_{n-1}.
KrausSet reconstruct_kraus(const CascadePlan& plan);

/// Replaces every exit unitary of `plan` by the unitary W_j with
/// W_j D1_j U_j T_{j-1} = M_j (and likewise for the final exit). The
/// completion on the kernel follows the svd2 gauge. The plan must realize the
/// POVM of `kraus` for the result to reproduce `kraus`.
CascadePlan fit_exit_unitaries(const CascadePlan& plan, const KrausSet& kraus);

/// alpha' = arccot(sqrt(1 + 1/cos(beta - alpha)) cot(beta - alpha)), the
/// second-module rotation of the unambiguous discrimination measurement.
/// arccot takes values in (0, pi). Throws DomainError unless
/// cos(beta - alpha) > 0 and sin(beta - alpha) != 0.
/// cos(beta - alpha) and |sin(beta - alpha)| must exceed this.
inline constexpr double kEkertDomainMargin = 1e-12;

double ekert_alpha_prime(double alpha, double beta);

}  // namespace povmc
