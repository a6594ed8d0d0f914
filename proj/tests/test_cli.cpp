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

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "povmc/cli.hpp"
#include "povmc/demos.hpp"
#include "povmc/documents.hpp"
#include "povmc/verify.hpp"

using namespace povmc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("povm_cli_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = {}) const {
    const std::string p = (path_ / name).string();
    if (!contents.empty()) io::write_file(p, contents);
    return p;
  }

 private:
  fs::path path_;
};

std::string povm_doc(const std::vector<Matrix2>& elements) {
  io::PovmDocument doc;
  doc.elements = elements;
  return io::serialize_povm_document(doc);
}

std::string trine_doc() {
  io::PovmDocument doc;
  doc.elements = demos::trine_elements();
  doc.exit_unitaries = demos::trine_exit_unitaries();
  doc.labels = std::vector<std::string>{"E1", "E2", "E3"};
  return io::serialize_povm_document(doc);
}

std::string hv_doc() { return povm_doc({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0)}); }

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"demo", "bb84"}).code == cli::kExitUsage);
  CHECK(run({"validate"}).code == cli::kExitUsage);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("validate") {
  TempDir dir;
  const Run ok = run({"validate", dir.file("trine.json", trine_doc())});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("valid 3-outcome POVM") != std::string::npos);

  const Run incomplete = run({"validate", dir.file(
      "bad.json", povm_doc({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 0.9)}))});
  CHECK(incomplete.code == cli::kExitDomain);
  CHECK(incomplete.out.find("completeness residual 1.000e-01") != std::string::npos);

  const Run notpsd = run({"validate", dir.file(
      "neg.json", povm_doc({Matrix2::diag(1.2, 0.5), Matrix2::diag(-0.2, 0.5)}))});
  CHECK(notpsd.code == cli::kExitDomain);
  CHECK(notpsd.err.find("element 2") != std::string::npos);

  const Run malformed = run({"validate", dir.file("broken.json", "{\"schema_version\": \"1\",")});
  CHECK(malformed.code == cli::kExitUsage);
  CHECK(malformed.err.find("line") != std::string::npos);
}

TEST_CASE("synthesize writes a plan and verifies it") {
  TempDir dir;
  const std::string plan = dir.file("plan.json");
  const std::string report = dir.file("report.json");
  const Run r = run({"synthesize", dir.file("trine.json", trine_doc()), "-o", plan,
                     "--report", report});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("0.61547971") != std::string::npos);
  CHECK(r.out.find("35.26439") != std::string::npos);
  CHECK(r.out.find("verification passed") != std::string::npos);
  const CascadePlan parsed = io::parse_plan_document(io::read_file(plan));
  CHECK(parsed.modules.size() == 2);

  const auto j = nlohmann::json::parse(io::read_file(report));
  CHECK(j["seed"] == 42);
  CHECK(j["case_count"] == 100);
  CHECK(j["checks"].size() == 6);

  const Run hv = run({"synthesize", dir.file("hv.json", hv_doc()), "-o", plan});
  CHECK(hv.code == cli::kExitOk);
  CHECK(io::parse_plan_document(io::read_file(plan)).modules.size() == 1);

  io::PovmDocument random_doc;
  random_doc.elements = random_povm(5, 3).elements();
  const Run five = run({"synthesize", dir.file("five.json", io::serialize_povm_document(random_doc)),
                        "-o", plan, "--seed", "7", "--trials", "20"});
  CHECK(five.code == cli::kExitOk);
  CHECK(five.out.find("seed 7, 20 cases") != std::string::npos);

  CHECK(run({"synthesize", dir.file("trine2.json", trine_doc())}).code == cli::kExitUsage);
}

TEST_CASE("simulate") {
  TempDir dir;
  const std::string trine_plan = dir.file(
      "trine_plan.json", io::serialize_plan_document(demos::trine_povm().plan));
  const Run h = run({"simulate", trine_plan, "--pure", "1,0,0,0"});
  CHECK(h.code == cli::kExitOk);
  CHECK(h.out.find("0.666666666667") != std::string::npos);
  CHECK(h.out.find("0.166666666667") != std::string::npos);
  CHECK(h.out.find("total probability 1.000000000000") != std::string::npos);

  const std::string hv_plan = dir.file(
      "hv_plan.json",
      io::serialize_plan_document(synthesize_cascade(
          KrausSet::validate({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0)}))));
  const Run v = run({"simulate", hv_plan, "--pure", "0,0,1,0"});
  CHECK(v.code == cli::kExitOk);
  CHECK(v.out.find("   1  0.000000000000") != std::string::npos);
  CHECK(v.out.find("   2  1.000000000000") != std::string::npos);

  const Run mixed = run({"simulate", trine_plan, "--density",
                         dir.file("rho.json", io::serialize_density_document(
                                                  0.5 * Matrix2::identity()))});
  CHECK(mixed.code == cli::kExitOk);
  CHECK(mixed.out.find("0.333333333333") != std::string::npos);

  const Run unnormalized = run({"simulate", trine_plan, "--pure", "2,0,0,0"});
  CHECK(unnormalized.code == cli::kExitOk);
  CHECK(unnormalized.err.find("warning") != std::string::npos);
  CHECK(run({"simulate", trine_plan, "--pure", "1.0000001,0,0,0"}).err.empty());

  CHECK(run({"simulate", trine_plan, "--pure", "0,0,0,0"}).code == cli::kExitUsage);
  CHECK(run({"simulate", trine_plan, "--pure", "1,0,0"}).code == cli::kExitUsage);
  CHECK(run({"simulate", trine_plan, "--pure", "1,x,0,0"}).code == cli::kExitUsage);
  CHECK(run({"simulate", trine_plan}).code == cli::kExitUsage);
  CHECK(run({"simulate", trine_plan, "--pure", "1,0,0,0", "--density", "x"}).code ==
        cli::kExitUsage);

  const std::string bad_rho = dir.file(
      "bad_rho.json", io::serialize_density_document(Matrix2::identity()));
  CHECK(run({"simulate", trine_plan, "--density", bad_rho}).code == cli::kExitDomain);
}

TEST_CASE("verify") {
  TempDir dir;
  const std::string doc = dir.file("trine.json", trine_doc());
  CHECK(run({"verify", doc}).code == cli::kExitOk);

  const std::string plan = dir.file(
      "plan.json", io::serialize_plan_document(demos::trine_povm().plan));
  const Run with_plan = run({"verify", doc, "--plan", plan, "--trials", "10"});
  CHECK(with_plan.code == cli::kExitOk);
  CHECK(with_plan.out.find("10 cases") != std::string::npos);

  CascadePlan wrong = demos::trine_povm().plan;
  wrong.modules[0].theta = 0.5;
  const std::string wrong_plan = dir.file("wrong.json", io::serialize_plan_document(wrong));
  const Run fails = run({"verify", doc, "--plan", wrong_plan});
  CHECK(fails.code == cli::kExitDomain);
  CHECK(fails.out.find("FAIL") != std::string::npos);

  const std::string hv_plan = dir.file(
      "hv_plan.json",
      io::serialize_plan_document(synthesize_cascade(
          KrausSet::validate({Matrix2::diag(1.0, 0.0), Matrix2::diag(0.0, 1.0)}))));
  CHECK(run({"verify", doc, "--plan", hv_plan}).code == cli::kExitDomain);
}

TEST_CASE("demo") {
  const Run trine = run({"demo", "trine"});
  CHECK(trine.code == cli::kExitOk);
  CHECK(trine.out.find("[[0.666667, 0.000000], [0.000000, 0.000000]]") != std::string::npos);
  CHECK(trine.out.find("[[0.166667, 0.288675], [0.288675, 0.500000]]") != std::string::npos);
  CHECK(trine.out.find("[[0.166667, -0.288675], [-0.288675, 0.500000]]") != std::string::npos);
  CHECK(trine.out.find("verification passed") != std::string::npos);

  const Run ekert = run({"demo", "ekert", "--alpha", "0", "--beta", "45"});
  CHECK(ekert.code == cli::kExitOk);
  CHECK(ekert.out.find("verification passed") != std::string::npos);

  const Run orthogonal = run({"demo", "ekert", "--alpha", "0", "--beta", "90"});
  CHECK(orthogonal.code == cli::kExitDomain);
  CHECK(orthogonal.err.find("cos(beta - alpha)") != std::string::npos);

  CHECK(run({"demo", "ekert", "--beta", "abc"}).code == cli::kExitUsage);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"demo", "ekert", "--alpha", "10", "--beta", "40"}).out ==
        run({"demo", "ekert", "--alpha", "10", "--beta", "40"}).out);
}
