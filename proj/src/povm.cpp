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

#include "povmc/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "povmc/errors.hpp"

namespace povmc {

namespace {

void require_finite(std::span<const Matrix2> ms, const char* what) {
  for (const auto& m : ms)
    if (!m.is_finite())
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

Matrix2 hermitian_part(const Matrix2& m) {
  return 0.5 * (m + m.adjoint());
}

}  // namespace

PovmDiagnostics diagnose_povm(std::span<const Matrix2> elements) {
  PovmDiagnostics d;
  Matrix2 sum;
  for (const auto& f : elements) {
    d.hermiticity.push_back(hermiticity_residual(f));
    d.min_eigenvalue.push_back(
        eig_hermitian2(hermitian_part(f), 1.0).values[1]);
    sum = sum + f;
  }
  d.completeness = max_abs_diff(sum, Matrix2::identity());
  return d;
}

PovmSet validate_povm(std::vector<Matrix2> elements, double tol) {
  if (elements.size() < 2)
    throw std::invalid_argument("a POVM needs at least two elements");
  require_finite(elements, "validate_povm");
  const PovmDiagnostics d = diagnose_povm(elements);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (d.hermiticity[i] > tol) throw NotHermitian(i, d.hermiticity[i]);
    if (d.min_eigenvalue[i] < -tol) throw NotPsd(i, d.min_eigenvalue[i]);
  }
  if (d.completeness > tol) throw IncompleteSum(d.completeness);
  return PovmSet(std::move(elements));
}

KrausSet KrausSet::validate(std::vector<Matrix2> operators, double tol) {
  if (operators.size() < 2)
    throw std::invalid_argument("a Kraus set needs at least two operators");
  require_finite(operators, "KrausSet");
  Matrix2 sum;
  for (const auto& m : operators) sum = sum + m.adjoint() * m;
  const double res = max_abs_diff(sum, Matrix2::identity());
  if (res > tol) throw IncompleteSum(res);
  return KrausSet(std::move(operators));
}

std::vector<Matrix2> KrausSet::povm_elements() const {
  std::vector<Matrix2> out;
  out.reserve(operators_.size());
  for (const auto& m : operators_) out.push_back(m.adjoint() * m);
  return out;
}

DensityMatrix::DensityMatrix(const Matrix2& rho, double tol) {
  if (!rho.is_finite())
    throw std::invalid_argument("density matrix: non-finite entry");
  const double herm = hermiticity_residual(rho);
  if (herm > tol) throw NotHermitian(std::nullopt, herm);
  const Matrix2 h = hermitian_part(rho);
  const double min_eig = eig_hermitian2(h, tol).values[1];
  if (min_eig < -tol) throw NotPsd(std::nullopt, min_eig);
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol) throw NotNormalized(tr);
  rho_ = h;
}

DensityMatrix DensityMatrix::pure(const Vector2& psi) {
  const double n = norm(psi);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("pure state needs a nonzero finite vector");
  const Vector2 unit{psi[0] / n, psi[1] / n};
  return DensityMatrix(outer(unit, unit));
}

KrausSet kraus_from_povm(const PovmSet& set,
                         const std::optional<std::vector<Matrix2>>& exit_unitaries) {
  if (exit_unitaries && exit_unitaries->size() != set.size())
    throw std::invalid_argument("kraus_from_povm: need one exit unitary per element");
  std::vector<Matrix2> ops;
  ops.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    Matrix2 m = sqrt_psd(set[i]);
    if (exit_unitaries) {
      const Matrix2& v = (*exit_unitaries)[i];
      if (!v.is_finite() || unitarity_residual(v) > kValidationTol)
        throw NotUnitary(i, v.is_finite() ? unitarity_residual(v) : INFINITY);
      m = v * m;
    }
    ops.push_back(m);
  }
  return KrausSet::validate(std::move(ops));
}

std::vector<OutcomeRecord> outcome_probabilities(const DensityMatrix& rho,
                                                 const KrausSet& kraus) {
  std::vector<OutcomeRecord> out;
  out.reserve(kraus.size());
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    const Matrix2& m = kraus[i];
    const Matrix2 unnormalized = m * rho.matrix() * m.adjoint();
    OutcomeRecord rec;
    rec.index = i;
    rec.probability = std::clamp(unnormalized.trace().real(), 0.0, 1.0);
    if (rec.probability >= kZeroProbability) {
      Matrix2 post = (1.0 / unnormalized.trace().real()) * unnormalized;
      rec.post_state = DensityMatrix(post);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace povmc
