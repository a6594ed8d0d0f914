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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracle.hpp"
#include "povmc/verify.hpp"

using namespace povmc;

TEST_CASE("random generators are deterministic and valid") {
  const PovmSet a = random_povm(4, 99);
  const PovmSet b = random_povm(4, 99);
  CHECK(a.elements() == b.elements());
  CHECK_FALSE(random_povm(4, 100).elements() == a.elements());
  CHECK_THROWS_AS(random_povm(1, 0), std::invalid_argument);

  const PovmSet r = random_rank_one_povm(5, 3);
  for (const auto& f : r.elements()) CHECK(std::abs(f.det()) < 1e-14);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    CHECK(std::abs(norm(random_pure_state(rng)) - 1.0) < 1e-15);
    CHECK(is_unitary(random_unitary(rng), 1e-14));
  }
  CHECK(random_kraus(3, 8).operators() == random_kraus(3, 8).operators());
}

TEST_CASE("verify_plan passes for synthesized plans") {
  const KrausSet k = random_kraus(4, 12);
  const VerificationReport report = verify_plan(k, synthesize_cascade(k), 50, 42);
  CHECK(report.passed());
  CHECK(report.seed == 42);
  CHECK(report.case_count == 50);
  for (const char* name : {"f_roundtrip", "kraus_roundtrip", "probability",
                           "conditional_state", "dark_port", "norm_drift"}) {
    REQUIRE(report.find(name) != nullptr);
    CHECK(report.find(name)->pass);
  }
  CHECK(report.find("nonexistent") == nullptr);
  CHECK(report.find("probability")->tolerance == 1e-9);
  CHECK(report.find("dark_port")->tolerance == 1e-10);
}

TEST_CASE("verify_plan is deterministic in the seed") {
  const KrausSet k = random_kraus(3, 4);
  const CascadePlan plan = synthesize_cascade(k);
  const auto a = verify_plan(k, plan, 20, 7);
  const auto b = verify_plan(k, plan, 20, 7);
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    CHECK(a.checks[i].max_residual == b.checks[i].max_residual);
}

TEST_CASE("verify_plan catches wrong plans") {
  const KrausSet k = random_kraus(3, 5);
  CascadePlan plan = synthesize_cascade(k);
  plan.modules[0].theta = std::min(plan.modules[0].theta + 1e-3, std::numbers::pi / 2);
  plan.modules[0].phi = std::max(plan.modules[0].phi - 1e-3, 0.0);
  const auto report = verify_plan(k, plan, 20, 1);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("f_roundtrip")->pass);
  CHECK_FALSE(report.find("probability")->pass);

  // Same elements, other exit unitary: only the Kraus-level and state checks fail.
  CascadePlan gauge = synthesize_cascade(k);
  gauge.final_exit_unitary = basis_rotation(0.5) * gauge.final_exit_unitary;
  const auto g = verify_plan(k, gauge, 20, 1);
  CHECK(g.find("f_roundtrip")->pass);
  CHECK(g.find("probability")->pass);
  CHECK_FALSE(g.find("kraus_roundtrip")->pass);
  CHECK_FALSE(g.find("conditional_state")->pass);

  CHECK_THROWS_AS(verify_plan(random_kraus(4, 1), plan, 1, 1), std::invalid_argument);
}

TEST_CASE("custom tolerances are reported") {
  const KrausSet k = random_kraus(2, 6);
  Tolerances tol;
  tol.probability = 0.0;
  tol.norm = 0.0;
  const auto r = verify_plan(k, synthesize_cascade(k), 5, 1, tol);
  CHECK(r.find("probability")->tolerance == 0.0);
}

TEST_CASE("mixed states") {
  const KrausSet k = random_kraus(4, 9);
  const CascadePlan plan = synthesize_cascade(k);
  const DensityMatrix rho(Matrix2(0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3));
  const auto report = verify_density(rho, k, plan);
  CHECK(report.passed());
  CHECK(report.case_count == 1);

  const auto exits = simulate_density(rho, optics::build_cascade_network(plan));
  double total = 0.0;
  for (std::size_t i = 0; i < exits.size(); ++i) {
    const double p = oracle::probability(oracle::to_eigen(k[i]), oracle::to_eigen(rho.matrix()));
    CHECK(std::abs(exits[i].probability - p) < 1e-12);
    REQUIRE(exits[i].state.has_value());
    CHECK(exits[i].state->trace().real() == doctest::Approx(1.0));
    total += exits[i].probability;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("probabilities are unchanged by exit unitaries") {
  std::mt19937_64 rng(13);
  const KrausSet k = random_kraus(5, 13);
  const CascadePlan plan = synthesize_cascade(k);
  for (std::size_t j = 0; j < plan.outcome_count(); ++j) {
    CascadePlan changed = plan;
    const Matrix2 w = random_unitary(rng);
    if (j < plan.modules.size())
      changed.modules[j].exit_unitary = w * changed.modules[j].exit_unitary;
    else
      changed.final_exit_unitary = w * changed.final_exit_unitary;
    const auto a = optics::build_cascade_network(plan);
    const auto b = optics::build_cascade_network(changed);
    const Vector2 psi = random_pure_state(rng);
    const auto ea = optics::exit_amplitudes(
        optics::propagate(optics::PhotonState::single(a.input, psi), a), a);
    const auto eb = optics::exit_amplitudes(
        optics::propagate(optics::PhotonState::single(b.input, psi), b), b);
    for (std::size_t i = 0; i < ea.size(); ++i)
      CHECK(std::abs(ea[i].probability - eb[i].probability) < 1e-10);
    const double overlap = std::abs(inner(*ea[j].polarization, *eb[j].polarization));
    CHECK(overlap < 1.0 - 1e-6);
  }
}
