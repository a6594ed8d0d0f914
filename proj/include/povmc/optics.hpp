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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "povmc/qmath.hpp"
#include "povmc/synthesis.hpp"

namespace povmc::optics {

/// Path names inside one module. `In` is the entrance of the first module
/// (later modules are fed by the previous P2 arm), S*/T* are the internal
/// arms, P1/P2 the recombined outputs. Vac* are the unused beamsplitter inputs
/// and Dark* the unused outputs of the recombining beamsplitters.
enum class Port : std::uint8_t {
  In, S1, S2, T1, T2, T3, T4, P1, P2, Vac1, Vac2, Vac3, Dark1, Dark2
};

struct ModeLabel {
  std::size_t module = 0;
  Port port = Port::In;

  std::string to_string() const;
  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
};

enum class Polarization : std::uint8_t { H = 0, V = 1 };

/// Single-photon amplitudes over (path mode, polarization). Every mode in the
/// map belongs to the state's mode universe, including zero-amplitude ones.
class PhotonState {
 public:
  PhotonState() = default;
  static PhotonState single(ModeLabel mode, const Vector2& jones);

  bool has_mode(ModeLabel mode) const { return modes_.contains(mode); }
  /// Adds `mode` with zero amplitude if it is not present yet.
  void declare(ModeLabel mode) { modes_.try_emplace(mode); }

  /// Throws UnknownMode.
  const Vector2& jones(ModeLabel mode) const;
  Vector2& jones(ModeLabel mode);
  Complex amplitude(ModeLabel mode, Polarization pol) const;

  double norm_squared() const;
  const std::map<ModeLabel, Vector2>& modes() const { return modes_; }

 private:
  std::map<ModeLabel, Vector2> modes_;
};

/// Transmits H and reflects V: out_a receives H from in_a and V from in_b,
/// out_b receives V from in_a and H from in_b. Reflection adds no phase.
struct PolarizingBeamsplitter {
  ModeLabel in_a, in_b, out_a, out_b;
};

/// H -> cos a H + sin a V, V -> cos a V - sin a H.
struct Rotator {
  ModeLabel mode;
  double angle = 0.0;
};

/// Path phase e^{i phase} on both polarizations.
struct PhaseShifter {
  ModeLabel mode;
  double phase = 0.0;
};

struct ModeUnitary {
  ModeLabel mode;
  Matrix2 u;
};

using OpticalElement =
    std::variant<PolarizingBeamsplitter, Rotator, PhaseShifter, ModeUnitary>;

struct OpticalNetwork {
  ModeLabel input;
  std::vector<OpticalElement> elements;
  std::vector<ModeLabel> exits;          // E_1 .. E_n
  std::vector<ModeLabel> vacuum_inputs;
  std::vector<ModeLabel> dark_ports;

  /// Every mode referenced by the network, sorted.
  std::vector<ModeLabel> modes() const;
};

/// Throws std::logic_error when an element consumes a mode that carries no
/// light at that point, overwrites a live mode, or an exit is not terminal.
void check_topology(const OpticalNetwork& network);

PhotonState apply_element(PhotonState state, const OpticalElement& element);

/// One module: U on the entrance, a beamsplitter splitting H to s1 and V to
/// s2, rotators theta (s1) and phi (s2), a +pi/2 rotator on s1, beamsplitters
/// fanning out to t1..t4, fixed rotators -pi/2 (t2), pi (t1), pi and +pi/2
/// (t4), phase shifters zeta (t2) and xi (t1), P1 merging t2 and t3 into p1,
/// P2 merging t1 and t4 into p2, and the exit unitary on p1.
/// Exits are {p1, p2}.
OpticalNetwork build_module_network(const ModuleSettings& settings,
                                    std::size_t module_index);

/// Chains the modules of `plan`: module j + 1 is fed by the p2 arm of module
/// j; the final exit unitary sits on the p2 arm of the last module.
OpticalNetwork build_cascade_network(const CascadePlan& plan);

/// Embeds `state` in the network's mode universe and applies every element
/// in order. Throws UnknownMode if the state uses a mode the network lacks.
PhotonState propagate(PhotonState state, const OpticalNetwork& network);

struct ExitRecord {
  std::size_t exit = 0;  // 0-based outcome index
  double probability = 0.0;
  std::optional<Vector2> polarization;  // normalized, gauge fixed
};

std::vector<ExitRecord> exit_amplitudes(const PhotonState& state,
                                        const OpticalNetwork& network);

/// Largest amplitude modulus found on the network's dark ports.
double dark_port_leakage(const PhotonState& state, const OpticalNetwork& network);

}  // namespace povmc::optics
