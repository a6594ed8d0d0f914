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

#include "povmc/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "povmc/errors.hpp"
#include "povmc/povm.hpp"

namespace povmc::optics {

namespace {

constexpr double kPi = std::numbers::pi;

const char* port_name(Port p) {
  switch (p) {
    case Port::In: return "in";
    case Port::S1: return "s1";
    case Port::S2: return "s2";
    case Port::T1: return "t1";
    case Port::T2: return "t2";
    case Port::T3: return "t3";
    case Port::T4: return "t4";
    case Port::P1: return "p1";
    case Port::P2: return "p2";
    case Port::Vac1: return "vac1";
    case Port::Vac2: return "vac2";
    case Port::Vac3: return "vac3";
    case Port::Dark1: return "dark1";
    case Port::Dark2: return "dark2";
  }
  return "?";
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<ModeLabel> element_modes(const OpticalElement& e) {
  return std::visit(
      Overloaded{
          [](const PolarizingBeamsplitter& b) {
            return std::vector<ModeLabel>{b.in_a, b.in_b, b.out_a, b.out_b};
          },
          [](const auto& single) { return std::vector<ModeLabel>{single.mode}; },
      },
      e);
}

// Appends one module fed from `entrance`. The pass-through arm is left
// without a unitary; the caller decides what follows it.
void append_module(OpticalNetwork& net, const ModuleSettings& s, std::size_t j,
                   ModeLabel entrance) {
  const auto at = [j](Port p) { return ModeLabel{j, p}; };
  auto& el = net.elements;

  el.push_back(ModeUnitary{entrance, s.pre_unitary});
  el.push_back(PolarizingBeamsplitter{entrance, at(Port::Vac1), at(Port::S1),
                                      at(Port::S2)});
  el.push_back(Rotator{at(Port::S1), s.theta});
  el.push_back(Rotator{at(Port::S2), s.phi});
  el.push_back(Rotator{at(Port::S1), kPi / 2});
  el.push_back(PolarizingBeamsplitter{at(Port::S1), at(Port::Vac2), at(Port::T1),
                                      at(Port::T2)});
  el.push_back(PolarizingBeamsplitter{at(Port::S2), at(Port::Vac3), at(Port::T4),
                                      at(Port::T3)});
  el.push_back(Rotator{at(Port::T2), -kPi / 2});
  el.push_back(Rotator{at(Port::T1), kPi});
  el.push_back(Rotator{at(Port::T4), kPi});
  el.push_back(Rotator{at(Port::T4), kPi / 2});
  el.push_back(PhaseShifter{at(Port::T2), s.zeta});
  el.push_back(PhaseShifter{at(Port::T1), s.xi});
  el.push_back(PolarizingBeamsplitter{at(Port::T2), at(Port::T3), at(Port::P1),
                                      at(Port::Dark1)});
  el.push_back(PolarizingBeamsplitter{at(Port::T1), at(Port::T4), at(Port::P2),
                                      at(Port::Dark2)});
  el.push_back(ModeUnitary{at(Port::P1), s.exit_unitary});

  for (Port p : {Port::Vac1, Port::Vac2, Port::Vac3})
    net.vacuum_inputs.push_back(at(p));
  net.dark_ports.push_back(at(Port::Dark1));
  net.dark_ports.push_back(at(Port::Dark2));
}

}  // namespace

std::string ModeLabel::to_string() const {
  return "m" + std::to_string(module + 1) + "." + port_name(port);
}

PhotonState PhotonState::single(ModeLabel mode, const Vector2& jones) {
  PhotonState s;
  s.modes_[mode] = jones;
  return s;
}

const Vector2& PhotonState::jones(ModeLabel mode) const {
  auto it = modes_.find(mode);
  if (it == modes_.end()) throw UnknownMode(mode.to_string());
  return it->second;
}

Vector2& PhotonState::jones(ModeLabel mode) {
  auto it = modes_.find(mode);
  if (it == modes_.end()) throw UnknownMode(mode.to_string());
  return it->second;
}

Complex PhotonState::amplitude(ModeLabel mode, Polarization pol) const {
  return jones(mode)[static_cast<std::size_t>(pol)];
}

double PhotonState::norm_squared() const {
  double total = 0.0;
  for (const auto& [mode, j] : modes_) total += std::norm(j[0]) + std::norm(j[1]);
  return total;
}

std::vector<ModeLabel> OpticalNetwork::modes() const {
  std::set<ModeLabel> all{input};
  for (const auto& e : elements)
    for (const auto& m : element_modes(e)) all.insert(m);
  all.insert(exits.begin(), exits.end());
  all.insert(vacuum_inputs.begin(), vacuum_inputs.end());
  all.insert(dark_ports.begin(), dark_ports.end());
  return {all.begin(), all.end()};
}

void check_topology(const OpticalNetwork& network) {
  std::set<ModeLabel> live{network.input};
  std::set<ModeLabel> seen{network.input};
  for (const auto& v : network.vacuum_inputs) {
    if (!seen.insert(v).second)
      throw std::logic_error("duplicate source mode " + v.to_string());
    live.insert(v);
  }
  const auto require_live = [&](const ModeLabel& m) {
    if (!live.contains(m))
      throw std::logic_error("mode " + m.to_string() + " is not live here");
  };
  for (const auto& e : network.elements) {
    if (const auto* b = std::get_if<PolarizingBeamsplitter>(&e)) {
      require_live(b->in_a);
      require_live(b->in_b);
      if (b->in_a == b->in_b || b->out_a == b->out_b)
        throw std::logic_error("beamsplitter ports must be distinct");
      live.erase(b->in_a);
      live.erase(b->in_b);
      for (const auto& out : {b->out_a, b->out_b}) {
        if (!seen.insert(out).second)
          throw std::logic_error("mode " + out.to_string() + " is produced twice");
        live.insert(out);
      }
    } else {
      require_live(element_modes(e).front());
    }
  }
  std::set<ModeLabel> terminal;
  for (const auto& m : network.exits) {
    require_live(m);
    if (!terminal.insert(m).second)
      throw std::logic_error("exit " + m.to_string() + " listed twice");
  }
  for (const auto& m : network.dark_ports) require_live(m);
}

PhotonState apply_element(PhotonState state, const OpticalElement& element) {
  for (const auto& m : element_modes(element))
    if (!state.has_mode(m)) throw UnknownMode(m.to_string());

  std::visit(
      Overloaded{
          [&](const PolarizingBeamsplitter& b) {
            const Vector2 a = state.jones(b.in_a);
            const Vector2 c = state.jones(b.in_b);
            state.jones(b.in_a) = {};
            state.jones(b.in_b) = {};
            state.jones(b.out_a) = {a[0], c[1]};
            state.jones(b.out_b) = {c[0], a[1]};
          },
          [&](const Rotator& r) {
            state.jones(r.mode) = rotator(r.angle) * state.jones(r.mode);
          },
          [&](const PhaseShifter& p) {
            const Complex ph = std::polar(1.0, p.phase);
            Vector2& j = state.jones(p.mode);
            j = {ph * j[0], ph * j[1]};
          },
          [&](const ModeUnitary& u) {
            state.jones(u.mode) = u.u * state.jones(u.mode);
          },
      },
      element);
  return state;
}

OpticalNetwork build_module_network(const ModuleSettings& settings,
                                    std::size_t module_index) {
  OpticalNetwork net;
  net.input = {module_index, Port::In};
  append_module(net, settings, module_index, net.input);
  net.exits = {{module_index, Port::P1}, {module_index, Port::P2}};
  return net;
}

OpticalNetwork build_cascade_network(const CascadePlan& plan) {
  validate_plan(plan);
  OpticalNetwork net;
  net.input = {0, Port::In};
  ModeLabel entrance = net.input;
  for (std::size_t j = 0; j < plan.modules.size(); ++j) {
    append_module(net, plan.modules[j], j, entrance);
    net.exits.push_back({j, Port::P1});
    entrance = {j, Port::P2};
  }
  net.elements.push_back(ModeUnitary{entrance, plan.final_exit_unitary});
  net.exits.push_back(entrance);
  return net;
}

PhotonState propagate(PhotonState state, const OpticalNetwork& network) {
  const std::vector<ModeLabel> universe = network.modes();
  for (const auto& [mode, j] : state.modes()) {
    if (!std::binary_search(universe.begin(), universe.end(), mode))
      throw UnknownMode(mode.to_string());
  }
  for (const auto& m : universe) state.declare(m);
  for (const auto& e : network.elements) state = apply_element(std::move(state), e);
  return state;
}

std::vector<ExitRecord> exit_amplitudes(const PhotonState& state,
                                        const OpticalNetwork& network) {
  std::vector<ExitRecord> out;
  out.reserve(network.exits.size());
  for (std::size_t i = 0; i < network.exits.size(); ++i) {
    const Vector2& j = state.jones(network.exits[i]);
    ExitRecord rec;
    rec.exit = i;
    rec.probability = std::norm(j[0]) + std::norm(j[1]);
    if (rec.probability >= kZeroProbability) {
      const double n = std::sqrt(rec.probability);
      rec.polarization = gauge_fixed({j[0] / n, j[1] / n});
    }
    out.push_back(rec);
  }
  return out;
}

double dark_port_leakage(const PhotonState& state, const OpticalNetwork& network) {
  double worst = 0.0;
  for (const auto& m : network.dark_ports)
    worst = std::max(worst, norm(state.jones(m)));
  return worst;
}

}  // namespace povmc::optics
