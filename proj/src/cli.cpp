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

#include "povmc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "povmc/demos.hpp"
#include "povmc/documents.hpp"
#include "povmc/errors.hpp"
#include "povmc/optics.hpp"
#include "povmc/povm.hpp"
#include "povmc/synthesis.hpp"
#include "povmc/verify.hpp"

namespace povmc::cli {

namespace {

constexpr double kNormWarning = 1e-6;

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }
double radians(double deg) { return deg * std::numbers::pi / 180.0; }

std::string format_complex(Complex z) {
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  if (im == 0.0) return fmt::format("{:.6f}", re);
  return fmt::format("{:.6f}{:+.6f}i", re, im);
}

std::string format_matrix(const Matrix2& m) {
  return fmt::format("[[{}, {}], [{}, {}]]", format_complex(m(0, 0)),
                     format_complex(m(0, 1)), format_complex(m(1, 0)),
                     format_complex(m(1, 1)));
}

std::string format_vector(const Vector2& v) {
  return fmt::format("({}, {})", format_complex(v[0]), format_complex(v[1]));
}

void print_matrices(std::ostream& out, const char* title, const std::vector<Matrix2>& ms) {
  out << title << "\n";
  for (std::size_t i = 0; i < ms.size(); ++i)
    out << fmt::format("  {:>2}  {}\n", i + 1, format_matrix(ms[i]));
}

void print_settings(std::ostream& out, const CascadePlan& plan) {
  out << fmt::format("{:>6}  {:>12} {:>10}  {:>12} {:>10}  {:>10} {:>10}  {:<44}  {}\n",
                     "module", "theta[rad]", "theta[deg]", "phi[rad]", "phi[deg]",
                     "zeta[rad]", "xi[rad]", "pre_unitary", "exit_unitary");
  for (std::size_t j = 0; j < plan.modules.size(); ++j) {
    const ModuleSettings& s = plan.modules[j];
    out << fmt::format(
        "{:>6}  {:>12.8f} {:>10.5f}  {:>12.8f} {:>10.5f}  {:>10.6f} {:>10.6f}  {:<44}  {}\n",
        j + 1, s.theta, degrees(s.theta), s.phi, degrees(s.phi), s.zeta, s.xi,
        format_matrix(s.pre_unitary), format_matrix(s.exit_unitary));
  }
  out << fmt::format("{:>6}  final exit unitary {}\n", "",
                     format_matrix(plan.final_exit_unitary));
}

void print_report(std::ostream& out, const VerificationReport& report) {
  out << fmt::format("verification (seed {}, {} cases)\n", report.seed,
                     report.case_count);
  for (const auto& c : report.checks)
    out << fmt::format("  {:<18} {:<4}  residual {:.3e}  tolerance {:.1e}\n", c.name,
                       c.pass ? "PASS" : "FAIL", c.max_residual, c.tolerance);
  out << (report.passed() ? "verification passed\n" : "verification FAILED\n");
}

int finish_verification(std::ostream& out, const VerificationReport& report,
                        const std::string& report_path) {
  print_report(out, report);
  if (!report_path.empty()) io::write_file(report_path, io::serialize_report(report));
  return report.passed() ? kExitOk : kExitDomain;
}

KrausSet load_kraus(const io::PovmDocument& doc) {
  return kraus_from_povm(validate_povm(doc.elements), doc.exit_unitaries);
}

Vector2 parse_pure(const std::string& spec, std::ostream& err) {
  std::vector<double> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pure", "not a number: \"" + item + "\"");
    }
  }
  if (parts.size() != 4)
    throw CLI::ValidationError("--pure", "expected a_re,a_im,b_re,b_im");
  Vector2 psi{Complex(parts[0], parts[1]), Complex(parts[2], parts[3])};
  const double n = norm(psi);
  if (!std::isfinite(n) || n == 0.0)
    throw CLI::ValidationError("--pure", "state has zero norm");
  if (std::abs(n - 1.0) > kNormWarning)
    err << fmt::format("warning: input norm is {:.9g}; normalizing\n", n);
  return {psi[0] / n, psi[1] / n};
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const io::PovmDocument doc = io::parse_povm_document(io::read_file(path));
  const PovmDiagnostics diag = diagnose_povm(doc.elements);
  out << fmt::format("{:>7}  {:>14}  {:>16}\n", "element", "hermiticity", "min eigenvalue");
  for (std::size_t i = 0; i < doc.elements.size(); ++i)
    out << fmt::format("{:>7}  {:>14.3e}  {:>16.3e}\n", i + 1, diag.hermiticity[i],
                       diag.min_eigenvalue[i]);
  out << fmt::format("completeness residual {:.3e}\n", diag.completeness);
  try {
    load_kraus(doc);
  } catch (const Error& e) {
    err << "invalid: " << e.what() << "\n";
    return kExitDomain;
  }
  out << fmt::format("valid {}-outcome POVM\n", doc.elements.size());
  return kExitOk;
}

int cmd_synthesize(const std::string& path, const std::string& plan_path,
                   std::uint64_t seed, std::size_t trials, const std::string& report_path,
                   std::ostream& out) {
  const io::PovmDocument doc = io::parse_povm_document(io::read_file(path));
  const KrausSet kraus = load_kraus(doc);
  const CascadePlan plan = synthesize_cascade(kraus);
  io::write_file(plan_path, io::serialize_plan_document(plan));
  print_settings(out, plan);
  out << "plan written to " << plan_path << "\n";
  return finish_verification(out, verify_plan(kraus, plan, trials, seed), report_path);
}

int cmd_simulate(const std::string& plan_path, const std::optional<Vector2>& pure,
                 const std::string& density_path, std::ostream& out) {
  const CascadePlan plan = io::parse_plan_document(io::read_file(plan_path));
  const optics::OpticalNetwork network = optics::build_cascade_network(plan);
  out << fmt::format("{:>4}  {:>14}  {}\n", "exit", "probability", "conditional state");
  double total = 0.0;
  if (pure) {
    const optics::PhotonState state =
        optics::propagate(optics::PhotonState::single(network.input, *pure), network);
    for (const auto& rec : optics::exit_amplitudes(state, network)) {
      total += rec.probability;
      out << fmt::format("{:>4}  {:>14.12f}  {}\n", rec.exit + 1, rec.probability,
                         rec.polarization ? format_vector(*rec.polarization) : "-");
    }
  } else {
    const DensityMatrix rho(io::parse_density_document(io::read_file(density_path)));
    const auto exits = simulate_density(rho, network);
    for (std::size_t i = 0; i < exits.size(); ++i) {
      total += exits[i].probability;
      out << fmt::format("{:>4}  {:>14.12f}  {}\n", i + 1, exits[i].probability,
                         exits[i].state ? format_matrix(*exits[i].state) : "-");
    }
  }
  out << fmt::format("total probability {:.12f}\n", total);
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& plan_path, std::uint64_t seed,
               std::size_t trials, const std::string& report_path, std::ostream& out) {
  const io::PovmDocument doc = io::parse_povm_document(io::read_file(path));
  const KrausSet kraus = load_kraus(doc);
  const CascadePlan plan = plan_path.empty()
                               ? synthesize_cascade(kraus)
                               : io::parse_plan_document(io::read_file(plan_path));
  if (plan.outcome_count() != kraus.size())
    throw DomainError(fmt::format("plan has {} outcomes, POVM has {}",
                                  plan.outcome_count(), kraus.size()));
  print_settings(out, plan);
  return finish_verification(out, verify_plan(kraus, plan, trials, seed), report_path);
}

int cmd_demo(const std::string& name, double alpha_deg, double beta_deg,
             std::uint64_t seed, std::size_t trials, const std::string& report_path,
             std::ostream& out) {
  if (name == "trine") {
    const demos::TrineDemo demo = demos::trine_povm();
    print_matrices(out, "POVM elements", demo.povm.elements());
    print_matrices(out, "Kraus operators", demo.kraus.operators());
    out << "settings\n";
    print_settings(out, demo.plan);
    return finish_verification(out, verify_plan(demo.kraus, demo.plan, trials, seed),
                               report_path);
  }
  const demos::EkertParams params{radians(alpha_deg), radians(beta_deg)};
  const demos::EkertDemo demo = demos::ekert_povm(params);
  out << fmt::format("alpha = {} deg, beta = {} deg, alpha' = {:.8f} rad\n", alpha_deg,
                     beta_deg, ekert_alpha_prime(params.alpha, params.beta));
  print_matrices(out, "POVM elements", demo.povm.elements());
  out << "settings\n";
  print_settings(out, demo.plan);
  return finish_verification(out, verify_plan(demo.kraus, demo.plan, trials, seed),
                             report_path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile single-photon polarization POVMs into linear-optics cascades",
               "povm"};
  app.require_subcommand(1);

  std::string input;
  std::string plan_path;
  std::string output;
  std::string report_path;
  std::string density_path;
  std::string pure_spec;
  std::string demo_name;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  double alpha = 0.0;
  double beta = 45.0;

  const auto add_verification_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed of the random trial states")->capture_default_str();
    cmd->add_option("--trials", trials, "Number of random trial states")
        ->capture_default_str();
    cmd->add_option("--report", report_path, "Write a JSON verification report");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a POVM document");
  validate->add_option("file", input, "POVM document")->required();

  CLI::App* synthesize =
      app.add_subcommand("synthesize", "Compile a POVM document into a cascade plan");
  synthesize->add_option("file", input, "POVM document")->required();
  synthesize->add_option("-o,--output", output, "Plan document to write")->required();
  add_verification_flags(synthesize);

  CLI::App* simulate = app.add_subcommand("simulate", "Propagate a state through a plan");
  simulate->add_option("plan", plan_path, "Plan document")->required();
  CLI::Option_group* state = simulate->add_option_group("state", "Input state (one of)");
  state->add_option("--pure", pure_spec, "Pure input a_re,a_im,b_re,b_im");
  state->add_option("--density", density_path, "Density matrix document");
  state->require_option(1);

  CLI::App* verify = app.add_subcommand("verify", "Verify a plan against a POVM document");
  verify->add_option("file", input, "POVM document")->required();
  verify->add_option("--plan", plan_path, "Plan document (synthesized when omitted)");
  add_verification_flags(verify);

  CLI::App* demo = app.add_subcommand("demo", "Run a built-in example");
  demo->add_option("name", demo_name, "trine or ekert")
      ->required()
      ->check(CLI::IsMember({"trine", "ekert"}));
  demo->add_option("--alpha", alpha, "Ekert angle alpha in degrees")->capture_default_str();
  demo->add_option("--beta", beta, "Ekert angle beta in degrees")->capture_default_str();
  add_verification_flags(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, out, err);
    if (synthesize->parsed())
      return cmd_synthesize(input, output, seed, trials, report_path, out);
    if (simulate->parsed()) {
      std::optional<Vector2> pure;
      if (!pure_spec.empty()) pure = parse_pure(pure_spec, err);
      return cmd_simulate(plan_path, pure, density_path, out);
    }
    if (verify->parsed())
      return cmd_verify(input, plan_path, seed, trials, report_path, out);
    return cmd_demo(demo_name, alpha, beta, seed, trials, report_path, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace povmc::cli
