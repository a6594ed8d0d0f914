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

#include <functional>
#include <random>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "povmc/demos.hpp"
#include "povmc/documents.hpp"
#include "povmc/verify.hpp"

using namespace povmc;
using namespace povmc::io;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DocumentError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("the reference POVM document parses") {
  const std::string text =
      R"({"schema_version":"1","elements":[[[[0.6667,0],[0,0]],[[0,0],[0,0]]],)"
      R"([[[0.3333,0],[0,0]],[[0,0],[1,0]]]]})";
  const PovmDocument doc = parse_povm_document(text);
  CHECK(doc.schema_version == "1");
  REQUIRE(doc.elements.size() == 2);
  CHECK(doc.elements[0](0, 0) == Complex(0.6667, 0.0));
  CHECK(doc.elements[1](1, 1) == Complex(1.0, 0.0));
  CHECK_FALSE(doc.exit_unitaries.has_value());
  CHECK_FALSE(doc.labels.has_value());
}

TEST_CASE("POVM documents round-trip exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PovmDocument doc;
    doc.elements = random_povm(2 + seed % 5, seed).elements();
    if (seed % 2 == 0) {
      std::mt19937_64 rng(seed);
      std::vector<Matrix2> exits;
      for (std::size_t i = 0; i < doc.elements.size(); ++i) exits.push_back(random_unitary(rng));
      doc.exit_unitaries = exits;
      doc.labels = std::vector<std::string>(doc.elements.size(), "outcome \"x\"");
    }
    CHECK(parse_povm_document(serialize_povm_document(doc)) == doc);
  }
}

TEST_CASE("plan documents round-trip exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CascadePlan plan = synthesize_cascade(random_kraus(2 + seed % 5, seed));
    plan.modules[0].zeta = 0.1 + 1e-17 * static_cast<double>(seed);
    plan.modules[0].xi = -2.718281828459045;
    const std::string text = serialize_plan_document(plan);
    CHECK(parse_plan_document(text) == plan);
    CHECK(serialize_plan_document(parse_plan_document(text)) == text);
  }
  const CascadePlan trine = demos::trine_povm().plan;
  CHECK(parse_plan_document(serialize_plan_document(trine)) == trine);
}

TEST_CASE("density documents") {
  const Matrix2 rho(0.75, Complex(0.1, -0.2), Complex(0.1, 0.2), 0.25);
  CHECK(parse_density_document(serialize_density_document(rho)) == rho);
  CHECK(parse_density_document(R"({"schema_version":"1","rho":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})") ==
        0.5 * Matrix2::identity());
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.seed = 42;
  r.case_count = 3;
  r.checks.push_back({"probability", true, 1.5e-16, 1e-9});
  const auto j = nlohmann::json::parse(serialize_report(r));
  CHECK(j["seed"] == 42);
  CHECK(j["case_count"] == 3);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "probability");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][0]["max_residual"].get<double>() == 1.5e-16);
  CHECK(j["checks"][0]["tolerance"].get<double>() == 1e-9);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string msg = error_of([] { parse_povm_document("{\n  \"schema_version\": \"1\",\n  oops\n}"); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column 3") != std::string::npos);
}

TEST_CASE("shape errors name the offending field") {
  CHECK(error_of([] { parse_povm_document(R"({"elements":[]})"); }).find("schema_version") !=
        std::string::npos);
  CHECK(error_of([] { parse_povm_document(R"({"schema_version":"2","elements":[]})"); })
            .find("unsupported version") != std::string::npos);
  CHECK(error_of([] { parse_povm_document(R"({"schema_version":"1"})"); })
            .find("missing field \"elements\"") != std::string::npos);
  const std::string bad_entry = error_of([] {
    parse_povm_document(
        R"({"schema_version":"1","elements":[[[[1,0],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[0,0],[1]]]]})");
  });
  CHECK(bad_entry.find("$.elements[1][1][1]") != std::string::npos);
  CHECK(error_of([] {
          parse_povm_document(
              R"({"schema_version":"1","elements":[[[[1,0],[0,0]],[[0,0],["a",0]]]]})");
        }).find("$.elements[0][1][1][0]") != std::string::npos);
  CHECK(error_of([] {
          parse_plan_document(R"({"schema_version":"1","modules":[{"theta":0.1}]})");
        }).find("$.modules[0]: missing field \"phi\"") != std::string::npos);
  CHECK(error_of([] { parse_povm_document(R"({"schema_version":"1","elements":[],"labels":[1]})"); })
            .find("$.labels[0]") != std::string::npos);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file.json"), DocumentError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file.json", "x"), DocumentError);
}
