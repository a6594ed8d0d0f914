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

#include "povmc/documents.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace povmc::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DocumentError(fmt::format("malformed JSON at line {}, column {}: {}", line,
                                    column, e.what()));
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError(fmt::format("{}: {}", path, what));
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, fmt::format("missing field \"{}\"", key));
  return *it;
}

double to_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Complex to_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected an [re, im] pair");
  return {to_number(j[0], path + "[0]"), to_number(j[1], path + "[1]")};
}

Matrix2 to_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a 2x2 matrix (two rows)");
  Matrix2 m;
  for (int r = 0; r < 2; ++r) {
    const std::string row_path = fmt::format("{}[{}]", path, r);
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2) fail(row_path, "expected a row of two entries");
    for (int c = 0; c < 2; ++c)
      m(r, c) = to_complex(row[static_cast<std::size_t>(c)],
                           fmt::format("{}[{}]", row_path, c));
  }
  return m;
}

std::vector<Matrix2> to_matrix_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of matrices");
  std::vector<Matrix2> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(to_matrix(j[i], fmt::format("{}[{}]", path, i)));
  return out;
}

std::string to_schema_version(const json& doc) {
  const json& v = field(doc, "$", "schema_version");
  if (!v.is_string()) fail("$.schema_version", "expected a string");
  const std::string version = v.get<std::string>();
  if (version != kSchemaVersion)
    fail("$.schema_version", fmt::format("unsupported version \"{}\"", version));
  return version;
}

json from_matrix(const Matrix2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json from_matrix_list(const std::vector<Matrix2>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(from_matrix(m));
  return out;
}

}  // namespace

PovmDocument parse_povm_document(std::string_view text) {
  const json doc = parse_json(text);
  PovmDocument out;
  out.schema_version = to_schema_version(doc);
  out.elements = to_matrix_list(field(doc, "$", "elements"), "$.elements");
  if (doc.contains("exit_unitaries"))
    out.exit_unitaries = to_matrix_list(doc["exit_unitaries"], "$.exit_unitaries");
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array()) fail("$.labels", "expected a list of strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) fail(fmt::format("$.labels[{}]", i), "expected a string");
      names.push_back(labels[i].get<std::string>());
    }
    out.labels = std::move(names);
  }
  return out;
}

std::string serialize_povm_document(const PovmDocument& doc) {
  json out;
  out["schema_version"] = doc.schema_version;
  out["elements"] = from_matrix_list(doc.elements);
  if (doc.exit_unitaries) out["exit_unitaries"] = from_matrix_list(*doc.exit_unitaries);
  if (doc.labels) out["labels"] = *doc.labels;
  return out.dump(2) + "\n";
}

CascadePlan parse_plan_document(std::string_view text) {
  const json doc = parse_json(text);
  to_schema_version(doc);
  const json& modules = field(doc, "$", "modules");
  if (!modules.is_array()) fail("$.modules", "expected a list");
  CascadePlan plan;
  for (std::size_t j = 0; j < modules.size(); ++j) {
    const std::string path = fmt::format("$.modules[{}]", j);
    const json& m = modules[j];
    ModuleSettings s;
    s.theta = to_number(field(m, path, "theta"), path + ".theta");
    s.phi = to_number(field(m, path, "phi"), path + ".phi");
    s.zeta = to_number(field(m, path, "zeta"), path + ".zeta");
    s.xi = to_number(field(m, path, "xi"), path + ".xi");
    s.pre_unitary = to_matrix(field(m, path, "pre_unitary"), path + ".pre_unitary");
    s.exit_unitary = to_matrix(field(m, path, "exit_unitary"), path + ".exit_unitary");
    plan.modules.push_back(s);
  }
  plan.final_exit_unitary =
      to_matrix(field(doc, "$", "final_exit_unitary"), "$.final_exit_unitary");
  return plan;
}

std::string serialize_plan_document(const CascadePlan& plan) {
  json modules = json::array();
  for (const auto& s : plan.modules) {
    modules.push_back({{"theta", s.theta},
                       {"phi", s.phi},
                       {"zeta", s.zeta},
                       {"xi", s.xi},
                       {"pre_unitary", from_matrix(s.pre_unitary)},
                       {"exit_unitary", from_matrix(s.exit_unitary)}});
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["modules"] = modules;
  out["final_exit_unitary"] = from_matrix(plan.final_exit_unitary);
  return out.dump(2) + "\n";
}

Matrix2 parse_density_document(std::string_view text) {
  const json doc = parse_json(text);
  to_schema_version(doc);
  return to_matrix(field(doc, "$", "rho"), "$.rho");
}

std::string serialize_density_document(const Matrix2& rho) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["rho"] = from_matrix(rho);
  return out.dump(2) + "\n";
}

std::string serialize_report(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance}});
  }
  json out;
  out["checks"] = checks;
  out["seed"] = report.seed;
  out["case_count"] = report.case_count;
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(fmt::format("cannot read {}", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError(fmt::format("cannot write {}", path));
  out << contents;
  if (!out) throw DocumentError(fmt::format("error writing {}", path));
}

}  // namespace povmc::io
