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
#include <stdexcept>
#include <string>

namespace povmc {

/// Base class for every domain failure raised by the library. Usage errors
/// (wrong sizes, non-finite input) are reported as std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  NotHermitian(std::optional<std::size_t> index, double residual);
  std::optional<std::size_t> index;
  double residual;
};

class NotPsd : public Error {
 public:
  NotPsd(std::optional<std::size_t> index, double min_eigenvalue);
  std::optional<std::size_t> index;
  double min_eigenvalue;
};

class NotUnitary : public Error {
 public:
  NotUnitary(std::optional<std::size_t> index, double residual);
  std::optional<std::size_t> index;
  double residual;
};

/// Sum of POVM elements (or of M_i^dag M_i) differs from the identity.
class IncompleteSum : public Error {
 public:
  explicit IncompleteSum(double residual);
  double residual;
};

/// Density matrix trace differs from one.
class NotNormalized : public Error {
 public:
  explicit NotNormalized(double trace);
  double trace;
};

/// Module `module` needed an effective eigenvalue outside [0, 1].
class EigenvalueOutOfRange : public Error {
 public:
  EigenvalueOutOfRange(std::size_t module, double eigenvalue);
  std::size_t module;
  double eigenvalue;
};

/// Operator `outcome` has weight on a polarization direction that earlier
/// modules have already fully absorbed.
class UnsupportedOperator : public Error {
 public:
  UnsupportedOperator(std::size_t outcome, double weight);
  std::size_t outcome;
  double weight;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownMode : public Error {
 public:
  explicit UnknownMode(const std::string& label);
};

}  // namespace povmc
