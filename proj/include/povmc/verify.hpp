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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "povmc/optics.hpp"
#include "povmc/povm.hpp"
#include "povmc/synthesis.hpp"

namespace povmc {

struct Check {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::size_t case_count = 0;

  bool passed() const;
  /// nullptr when no check has that name.
  const Check* find(const std::string& name) const;
};

/// Thresholds used by the verification checks.
struct Tolerances {
  double operators = 1e-8;     // F-level and Kraus-level round trip
  double probability = 1e-9;   // simulator vs tr(M rho M^dag)
  double conditional = 1e-9;   // 1 - |<sim|oracle>|
  double dark_port = 1e-10;    // amplitude modulus on unused outputs
  double norm = 1e-9;          // total probability drift
};

/// Compares the plan against `kraus`: operator round trips, then simulates
/// `trial_states` random pure states drawn from `seed` through the optical
/// network and checks exit statistics against the analytic oracle.
///
/// Checks: f_roundtrip, kraus_roundtrip, probability, conditional_state,
/// dark_port, norm_drift.
VerificationReport verify_plan(const KrausSet& kraus, const CascadePlan& plan,
                               std::size_t trial_states, std::uint64_t seed,
                               const Tolerances& tol = {});

/// Simulates each eigen-component of `rho` and recombines the exit
/// statistics. Checks: probability, post_state, norm_drift.
VerificationReport verify_density(const DensityMatrix& rho, const KrausSet& kraus,
                                  const CascadePlan& plan,
                                  const Tolerances& tol = {});

struct MixedExit {
  double probability = 0.0;
  std::optional<Matrix2> state;  // absent below kZeroProbability
};

/// Exit statistics of a mixed input, as an eigenvalue-weighted mixture of
/// pure simulations.
std::vector<MixedExit> simulate_density(const DensityMatrix& rho,
                                        const optics::OpticalNetwork& network);

/// Two complex Gaussians, normalized.
Vector2 random_pure_state(std::mt19937_64& rng);

Matrix2 random_unitary(std::mt19937_64& rng);

/// F_i = S^{-1/2} G_i S^{-1/2} with G_i = A_i A_i^dag for complex Gaussian A_i
/// and S = sum G_i. Deterministic in `seed`.
PovmSet random_povm(std::size_t n, std::uint64_t seed);

/// Same construction with rank-one G_i = g_i g_i^dag, so every element is a
/// weighted projector.
PovmSet random_rank_one_povm(std::size_t n, std::uint64_t seed);

/// random_povm(n, seed) with a random exit unitary on every element.
KrausSet random_kraus(std::size_t n, std::uint64_t seed);

}  // namespace povmc
