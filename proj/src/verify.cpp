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

#include "povmc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace povmc {

namespace {

constexpr double kMinNormalizerEigenvalue = 1e-12;

Check make_check(std::string name, double residual, double tol) {
  return {std::move(name), residual <= tol, residual, tol};
}

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Matrix2 hermitian_part(const Matrix2& m) { return 0.5 * (m + m.adjoint()); }

// F_i = S^{-1/2} G_i S^{-1/2}; redraws when S is close to singular.
template <class Draw>
PovmSet normalized_povm(std::size_t n, std::uint64_t seed, Draw draw) {
  if (n < 2) throw std::invalid_argument("random POVM needs n >= 2");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Matrix2> g;
    Matrix2 sum;
    for (std::size_t i = 0; i < n; ++i) {
      g.push_back(draw(rng));
      sum = sum + g.back();
    }
    const HermitianEigen e = eig_hermitian2(hermitian_part(sum), 1.0);
    if (e.values[1] < kMinNormalizerEigenvalue) continue;
    const Matrix2 inv_sqrt =
        e.vectors *
        Matrix2::diag(1.0 / std::sqrt(e.values[0]), 1.0 / std::sqrt(e.values[1])) *
        e.vectors.adjoint();
    std::vector<Matrix2> f;
    f.reserve(n);
    for (const auto& gi : g) f.push_back(hermitian_part(inv_sqrt * gi * inv_sqrt));
    return validate_povm(std::move(f));
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

Vector2 random_pure_state(std::mt19937_64& rng) {
  for (;;) {
    Vector2 v{gaussian(rng), gaussian(rng)};
    const double n = norm(v);
    if (n > 1e-12) return {v[0] / n, v[1] / n};
  }
}

Matrix2 random_unitary(std::mt19937_64& rng) {
  const Vector2 first = random_pure_state(rng);
  const Vector2 perp{-std::conj(first[1]), std::conj(first[0])};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, angle(rng));
  return Matrix2::from_columns(first, {perp[0] * phase, perp[1] * phase});
}

PovmSet random_povm(std::size_t n, std::uint64_t seed) {
  return normalized_povm(n, seed, [](std::mt19937_64& rng) {
    Matrix2 a{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
    return a * a.adjoint();
  });
}

PovmSet random_rank_one_povm(std::size_t n, std::uint64_t seed) {
  return normalized_povm(n, seed, [](std::mt19937_64& rng) {
    const Vector2 g{gaussian(rng), gaussian(rng)};
    return outer(g, g);
  });
}

KrausSet random_kraus(std::size_t n, std::uint64_t seed) {
  const PovmSet povm = random_povm(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Matrix2> exits;
  for (std::size_t i = 0; i < n; ++i) exits.push_back(random_unitary(rng));
  return kraus_from_povm(povm, exits);
}

VerificationReport verify_plan(const KrausSet& kraus, const CascadePlan& plan,
                               std::size_t trial_states, std::uint64_t seed,
                               const Tolerances& tol) {
  if (kraus.size() != plan.outcome_count())
    throw std::invalid_argument("verify_plan: plan and Kraus set differ in size");

  VerificationReport report;
  report.seed = seed;
  report.case_count = trial_states;

  const KrausSet rebuilt = reconstruct_kraus(plan);
  const std::vector<Matrix2> f_in = kraus.povm_elements();
  const std::vector<Matrix2> f_out = rebuilt.povm_elements();
  double f_res = 0.0;
  double m_res = 0.0;
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    f_res = std::max(f_res, max_abs_diff(f_in[i], f_out[i]));
    m_res = std::max(m_res, max_abs_diff(kraus[i], rebuilt[i]));
  }
  report.checks.push_back(make_check("f_roundtrip", f_res, tol.operators));
  report.checks.push_back(make_check("kraus_roundtrip", m_res, tol.operators));

  const optics::OpticalNetwork network = optics::build_cascade_network(plan);
  std::mt19937_64 rng(seed);
  double p_res = 0.0;
  double cond_res = 0.0;
  double dark_res = 0.0;
  double norm_res = 0.0;
  for (std::size_t t = 0; t < trial_states; ++t) {
    const Vector2 psi = random_pure_state(rng);
    const optics::PhotonState out =
        optics::propagate(optics::PhotonState::single(network.input, psi), network);
    const auto exits = optics::exit_amplitudes(out, network);
    const auto oracle = outcome_probabilities(DensityMatrix::pure(psi), kraus);

    double total = 0.0;
    for (std::size_t i = 0; i < exits.size(); ++i) {
      total += exits[i].probability;
      p_res = std::max(p_res, std::abs(exits[i].probability - oracle[i].probability));
      if (!exits[i].polarization || !oracle[i].post_state) continue;
      const Vector2 expected = kraus[i] * psi;
      const double overlap =
          std::abs(inner(*exits[i].polarization, expected)) / norm(expected);
      cond_res = std::max(cond_res, std::abs(1.0 - overlap));
    }
    dark_res = std::max(dark_res, optics::dark_port_leakage(out, network));
    norm_res = std::max({norm_res, std::abs(total - 1.0),
                         std::abs(out.norm_squared() - 1.0)});
  }
  report.checks.push_back(make_check("probability", p_res, tol.probability));
  report.checks.push_back(make_check("conditional_state", cond_res, tol.conditional));
  report.checks.push_back(make_check("dark_port", dark_res, tol.dark_port));
  report.checks.push_back(make_check("norm_drift", norm_res, tol.norm));
  return report;
}

std::vector<MixedExit> simulate_density(const DensityMatrix& rho,
                                        const optics::OpticalNetwork& network) {
  const HermitianEigen e = eig_hermitian2(rho.matrix());
  std::vector<double> prob(network.exits.size(), 0.0);
  std::vector<Matrix2> unnormalized(network.exits.size());
  for (int k = 0; k < 2; ++k) {
    const double weight = e.values[k];
    if (weight <= 0.0) continue;
    const optics::PhotonState out = optics::propagate(
        optics::PhotonState::single(network.input, e.vectors.column(k)), network);
    for (std::size_t i = 0; i < network.exits.size(); ++i) {
      const Vector2& amp = out.jones(network.exits[i]);
      prob[i] += weight * (std::norm(amp[0]) + std::norm(amp[1]));
      unnormalized[i] = unnormalized[i] + weight * outer(amp, amp);
    }
  }
  std::vector<MixedExit> result(network.exits.size());
  for (std::size_t i = 0; i < result.size(); ++i) {
    result[i].probability = std::clamp(prob[i], 0.0, 1.0);
    if (prob[i] >= kZeroProbability)
      result[i].state = (1.0 / prob[i]) * unnormalized[i];
  }
  return result;
}

VerificationReport verify_density(const DensityMatrix& rho, const KrausSet& kraus,
                                  const CascadePlan& plan, const Tolerances& tol) {
  if (kraus.size() != plan.outcome_count())
    throw std::invalid_argument("verify_density: plan and Kraus set differ in size");
  VerificationReport report;
  report.case_count = 1;

  const optics::OpticalNetwork network = optics::build_cascade_network(plan);
  const auto simulated = simulate_density(rho, network);
  const auto oracle = outcome_probabilities(rho, kraus);

  double p_res = 0.0;
  double state_res = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < simulated.size(); ++i) {
    total += simulated[i].probability;
    p_res = std::max(p_res, std::abs(simulated[i].probability - oracle[i].probability));
    if (simulated[i].state && oracle[i].post_state)
      state_res = std::max(
          state_res, max_abs_diff(*simulated[i].state, oracle[i].post_state->matrix()));
    else if (simulated[i].state.has_value() != oracle[i].post_state.has_value())
      state_res = std::max(state_res, std::max(simulated[i].probability,
                                               oracle[i].probability));
  }
  report.checks.push_back(make_check("probability", p_res, tol.probability));
  report.checks.push_back(make_check("post_state", state_res, tol.conditional));
  report.checks.push_back(make_check("norm_drift", std::abs(total - 1.0), tol.norm));
  return report;
}

}  // namespace povmc
