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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "povmc/qmath.hpp"
#include "povmc/synthesis.hpp"
#include "povmc/verify.hpp"

namespace povmc::io {

inline constexpr const char* kSchemaVersion = "1";

/// Malformed input: bad JSON syntax, missing fields or wrong shapes. The
/// message carries line/column or the JSON path of the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex numbers are [re, im] pairs; a matrix is rows -> cols -> [re, im].
struct PovmDocument {
  std::string schema_version = kSchemaVersion;
  std::vector<Matrix2> elements;
  std::optional<std::vector<Matrix2>> exit_unitaries;
  std::optional<std::vector<std::string>> labels;

  friend bool operator==(const PovmDocument&, const PovmDocument&) = default;
};

PovmDocument parse_povm_document(std::string_view text);
std::string serialize_povm_document(const PovmDocument& doc);

/// {"schema_version", "modules": [{theta, phi, zeta, xi, pre_unitary,
/// exit_unitary}], "final_exit_unitary"}. Angles in radians.
CascadePlan parse_plan_document(std::string_view text);
std::string serialize_plan_document(const CascadePlan& plan);

/// {"schema_version", "rho": matrix}. Only the shape is checked here.
Matrix2 parse_density_document(std::string_view text);
std::string serialize_density_document(const Matrix2& rho);

std::string serialize_report(const VerificationReport& report);

/// Whole file contents. Throws DocumentError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace povmc::io
