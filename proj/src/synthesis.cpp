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

#include "povmc/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "povmc/errors.hpp"

namespace povmc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPinvCutoff = 1e-10;
constexpr double kKernelWeightTol = 1e-8;
constexpr double kAngleSlack = 1e-12;

double squared_norm(const Vector2& v) { return std::norm(v[0]) + std::norm(v[1]); }

// Pseudo-inverse of the residual prefix, with its numerical kernel.
struct PrefixInverse {
  Matrix2 pinv;
  std::vector<Vector2> kernel;        // input-side directions T maps to ~0
  std::vector<Vector2> range_basis;   // output-side directions T reaches
};

PrefixInverse invert_prefix(const Matrix2& t) {
  const Svd2 s = svd2(t);
  const Matrix2 right = s.u.adjoint();
  PrefixInverse out;
  std::array<double, 2> inv{0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    if (s.d[k] > kPinvCutoff) {
      inv[k] = 1.0 / s.d[k];
      out.range_basis.push_back(s.v.column(k));
    } else {
      out.kernel.push_back(right.column(k));
    }
  }
  out.pinv = right * Matrix2::diag(inv[0], inv[1]) * s.v.adjoint();
  return out;
}

void check_support(const PrefixInverse& p, const Matrix2& m, std::size_t outcome) {
  for (const auto& q : p.kernel) {
    const double weight = squared_norm(m * q);
    if (weight > kKernelWeightTol) throw UnsupportedOperator(outcome, weight);
  }
}

}  // namespace

Matrix2 ModuleSettings::d1() const {
  return Matrix2::diag(std::polar(std::cos(theta), zeta), std::cos(phi));
}

Matrix2 ModuleSettings::d2() const {
  return Matrix2::diag(std::polar(std::sin(theta), xi), std::sin(phi));
}

void validate_plan(const CascadePlan& plan, double tol) {
  if (plan.modules.empty())
    throw std::invalid_argument("a cascade plan needs at least one module");
  const auto in_range = [](double a) {
    return std::isfinite(a) && a >= -kAngleSlack && a <= kHalfPi + kAngleSlack;
  };
  for (std::size_t j = 0; j < plan.modules.size(); ++j) {
    const ModuleSettings& m = plan.modules[j];
    if (!in_range(m.theta) || !in_range(m.phi))
      throw std::invalid_argument("module " + std::to_string(j + 1) +
                                  ": theta and phi must lie in [0, pi/2]");
    if (!std::isfinite(m.zeta) || !std::isfinite(m.xi))
      throw std::invalid_argument("module " + std::to_string(j + 1) +
                                  ": non-finite phase");
    for (const Matrix2* u : {&m.pre_unitary, &m.exit_unitary}) {
      if (!is_unitary(*u, tol))
        throw NotUnitary(j, u->is_finite() ? unitarity_residual(*u) : INFINITY);
    }
  }
  const Matrix2& last = plan.final_exit_unitary;
  if (!is_unitary(last, tol))
    throw NotUnitary(plan.modules.size(),
                     last.is_finite() ? unitarity_residual(last) : INFINITY);
}

SynthesisTrace synthesize_cascade_traced(std::span<const Matrix2> kraus) {
  const std::size_t n = kraus.size();
  if (n < 2) throw std::invalid_argument("synthesis needs at least two operators");
  KrausSet::validate({kraus.begin(), kraus.end()});

  SynthesisTrace trace;
  trace.prefixes.push_back(Matrix2::identity());

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Matrix2 t = trace.prefixes.back();
    const PrefixInverse inv = invert_prefix(t);
    check_support(inv, kraus[j], j);

    const Matrix2 f = kraus[j].adjoint() * kraus[j];
    const Matrix2 effective = kraus[j] * inv.pinv;
    const Svd2 s = svd2(effective);
    const Matrix2 eigvecs = s.u.adjoint();

    // F_j must fit under the identity that is still left, T^dag T.
    const Matrix2 remainder = t.adjoint() * t - f;
    const double slack = eig_hermitian2(remainder, 1.0).values[1];
    if (slack < -kValidationTol) throw EigenvalueOutOfRange(j, s.d[0] * s.d[0]);

    // cos from this exit, sin from the amplitude left for every later one.
    std::array<double, 2> angle{};
    for (int k = 0; k < 2; ++k) {
      const Vector2 e = eigvecs.column(k);
      double in_range = 0.0;
      for (const auto& r : inv.range_basis) in_range += std::norm(inner(r, e));
      double later = 0.0;
      for (std::size_t i = j + 1; i < n; ++i)
        later += squared_norm(kraus[i] * (inv.pinv * e));
      const double c = s.d[k];
      const double sn = std::sqrt(later);
      // Directions outside the range of T carry no amplitude; lambda = 0.
      angle[k] = (in_range < 0.5 || (c == 0.0 && sn == 0.0))
                     ? kHalfPi
                     : std::atan2(sn, c);
    }

    ModuleSettings m;
    m.theta = angle[0];
    m.phi = angle[1];
    m.pre_unitary = s.u;
    m.exit_unitary = s.v;
    trace.plan.modules.push_back(m);

    SynthesisStep step;
    step.residual_prefix = t;
    step.effective_operator = effective.adjoint() * effective;
    step.eigenvalues = {std::pow(std::cos(angle[0]), 2),
                        std::pow(std::cos(angle[1]), 2)};
    trace.steps.push_back(step);

    trace.prefixes.push_back(m.d2() * m.pre_unitary * t);
  }

  const Matrix2 t = trace.prefixes.back();
  check_support(invert_prefix(t), kraus[n - 1], n - 1);
  trace.plan.final_exit_unitary = procrustes_unitary(t, kraus[n - 1]);
  return trace;
}

CascadePlan synthesize_cascade(const KrausSet& kraus) {
  return synthesize_cascade_traced(kraus.operators()).plan;
}

KrausSet reconstruct_kraus(const CascadePlan& plan) {
  validate_plan(plan);
  std::vector<Matrix2> ops;
  ops.reserve(plan.outcome_count());
  Matrix2 t = Matrix2::identity();
  for (const ModuleSettings& m : plan.modules) {
    const Matrix2 rotated = m.pre_unitary * t;
    ops.push_back(m.exit_unitary * m.d1() * rotated);
    t = m.d2() * rotated;
  }
  ops.push_back(plan.final_exit_unitary * t);
  return KrausSet::validate(std::move(ops));
}

CascadePlan fit_exit_unitaries(const CascadePlan& plan, const KrausSet& kraus) {
  validate_plan(plan);
  if (kraus.size() != plan.outcome_count())
    throw std::invalid_argument("fit_exit_unitaries: outcome count mismatch");
  CascadePlan out = plan;
  Matrix2 t = Matrix2::identity();
  for (std::size_t j = 0; j < out.modules.size(); ++j) {
    ModuleSettings& m = out.modules[j];
    const Matrix2 rotated = m.pre_unitary * t;
    m.exit_unitary = procrustes_unitary(m.d1() * rotated, kraus[j]);
    t = m.d2() * rotated;
  }
  out.final_exit_unitary = procrustes_unitary(t, kraus[kraus.size() - 1]);
  return out;
}

double ekert_alpha_prime(double alpha, double beta) {
  const double delta = beta - alpha;
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  if (!(c > kEkertDomainMargin) || !(std::abs(s) > kEkertDomainMargin))
    throw DomainError(fmt::format(
        "need cos(beta - alpha) > 0 and beta != alpha (cos = {:.3e}, sin = {:.3e})", c, s));
  const double x = std::sqrt(1.0 + 1.0 / c) * (c / s);
  return std::atan2(1.0, x);
}

}  // namespace povmc
