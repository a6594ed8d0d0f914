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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "povmc/qmath.hpp"

namespace povmc {

/// Outcome probabilities below this have no post-measurement state.
inline constexpr double kZeroProbability = 1e-12;

/// Per-element residuals of a candidate POVM, computed without throwing.
struct PovmDiagnostics {
  std::vector<double> hermiticity;      // |F - F^dag| per element
  std::vector<double> min_eigenvalue;   // of the Hermitian part
  double completeness = 0.0;            // |sum F - I| entrywise max
};

PovmDiagnostics diagnose_povm(std::span<const Matrix2> elements);

/// Hermitian, positive semidefinite operators summing to the identity.
/// Element order is the outcome order.
class PovmSet {
 public:
  const std::vector<Matrix2>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Matrix2& operator[](std::size_t i) const { return elements_[i]; }

 private:
  explicit PovmSet(std::vector<Matrix2> elements)
      : elements_(std::move(elements)) {}
  friend PovmSet validate_povm(std::vector<Matrix2>, double);

  std::vector<Matrix2> elements_;
};

/// Checks every element in order and throws the first violation:
/// NotHermitian(i), NotPsd(i, min eigenvalue), then IncompleteSum(residual).
PovmSet validate_povm(std::vector<Matrix2> elements,
                      double tol = kValidationTol);

/// Measurement operators M_i with sum M_i^dag M_i = I.
class KrausSet {
 public:
  /// Throws IncompleteSum when the completeness residual exceeds `tol`.
  static KrausSet validate(std::vector<Matrix2> operators,
                           double tol = kValidationTol);

  const std::vector<Matrix2>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  const Matrix2& operator[](std::size_t i) const { return operators_[i]; }

  /// F_i = M_i^dag M_i.
  std::vector<Matrix2> povm_elements() const;

 private:
  explicit KrausSet(std::vector<Matrix2> ops) : operators_(std::move(ops)) {}
  std::vector<Matrix2> operators_;
};

class DensityMatrix {
 public:
  /// Throws NotHermitian, NotPsd or NotNormalized.
  explicit DensityMatrix(const Matrix2& rho, double tol = kValidationTol);

  static DensityMatrix pure(const Vector2& psi);

  const Matrix2& matrix() const { return rho_; }

 private:
  Matrix2 rho_;
};

struct OutcomeRecord {
  std::size_t index = 0;
  double probability = 0.0;
  std::optional<DensityMatrix> post_state;
};

/// M_i = V_i sqrt(F_i); with no exit unitaries V_i = I.
KrausSet kraus_from_povm(const PovmSet& set,
                         const std::optional<std::vector<Matrix2>>& exit_unitaries =
                             std::nullopt);

/// p_i = tr(M_i rho M_i^dag) and rho_i = M_i rho M_i^dag / p_i.
std::vector<OutcomeRecord> outcome_probabilities(const DensityMatrix& rho,
                                                 const KrausSet& kraus);

}  // namespace povmc
