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

#include "povmc/errors.hpp"

#include <fmt/format.h>

namespace povmc {

namespace {

std::string where(std::optional<std::size_t> index) {
  return index ? fmt::format("element {}", *index + 1) : std::string("matrix");
}

}  // namespace

NotHermitian::NotHermitian(std::optional<std::size_t> index_, double residual_)
    : Error(fmt::format("{} is not Hermitian (residual {:.3e})", where(index_),
                        residual_)),
      index(index_),
      residual(residual_) {}

NotPsd::NotPsd(std::optional<std::size_t> index_, double min_eigenvalue_)
    : Error(fmt::format("{} is not positive semidefinite (min eigenvalue {:.3e})",
                        where(index_), min_eigenvalue_)),
      index(index_),
      min_eigenvalue(min_eigenvalue_) {}

NotUnitary::NotUnitary(std::optional<std::size_t> index_, double residual_)
    : Error(fmt::format("{} is not unitary (residual {:.3e})", where(index_),
                        residual_)),
      index(index_),
      residual(residual_) {}

IncompleteSum::IncompleteSum(double residual_)
    : Error(fmt::format("operators do not sum to the identity (residual {:.3e})",
                        residual_)),
      residual(residual_) {}

NotNormalized::NotNormalized(double trace_)
    : Error(fmt::format("density matrix trace is {:.12g}, expected 1", trace_)),
      trace(trace_) {}

EigenvalueOutOfRange::EigenvalueOutOfRange(std::size_t module_,
                                           double eigenvalue_)
    : Error(fmt::format(
          "module {}: effective eigenvalue {:.12g} outside [0, 1]; operator {} "
          "is not dominated by the remaining identity",
          module_ + 1, eigenvalue_, module_ + 1)),
      module(module_),
      eigenvalue(eigenvalue_) {}

UnsupportedOperator::UnsupportedOperator(std::size_t outcome_, double weight_)
    : Error(fmt::format("operator {} has weight {:.3e} on a direction already "
                        "absorbed by earlier modules",
                        outcome_ + 1, weight_)),
      outcome(outcome_),
      weight(weight_) {}

UnknownMode::UnknownMode(const std::string& label)
    : Error("unknown optical mode " + label) {}

}  // namespace povmc
