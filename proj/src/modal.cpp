// Copyright 2026 The Resonalyze Authors
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

#include "resonalyze/modal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "resonalyze/errors.hpp"
#include "resonalyze/oscillator.hpp"

namespace resonalyze {

void validate(const WaveProblem& p) {
  if (p.length.sign() <= 0) throw InvalidArgument("wave: length must be positive");
  if (p.speed.sign() <= 0) throw InvalidArgument("wave: speed must be positive");
  if (p.mode_count < 1) throw InvalidArgument("wave: modeCount must be at least 1");
  for (const auto& term : p.forcing) {
    if (term.mode < 1 || term.mode > p.mode_count) {
      throw InvalidArgument("wave: forcing mode index out of range 1..modeCount");
    }
    if (!std::isfinite(term.coefficient)) throw InvalidArgument("wave: coefficient must be finite");
  }
}

ScaledReal mode_frequency(const WaveProblem& p, int j) {
  return p.speed * ScaledReal::pi(j) / p.length;
}

double mode_shape(const WaveProblem& p, int j, double x) {
  const double len = p.length.to_double();
  if (x <= 0.0 || x >= len) return 0.0;
  return std::sqrt(2.0 / len) * std::sin(static_cast<double>(j) * std::numbers::pi * x / len);
}

std::vector<ModalOscillator> modal_reduce(const WaveProblem& p) {
  validate(p);
  std::map<int, std::optional<PeriodicForcing>> merged;
  for (const auto& term : p.forcing) {
    if (term.coefficient == 0.0) continue;
    auto scaled = term.profile.scaled(term.coefficient);
    auto& slot = merged[term.mode];
    if (!slot) {
      slot = std::move(scaled);
    } else {
      if (!(slot->period() == scaled.period())) {
        throw InvalidArgument("wave: forcing terms on one mode must share an exact period");
      }
      slot = *slot + scaled;
    }
  }
  std::vector<ModalOscillator> out;
  for (auto& [j, f] : merged) out.push_back({j, mode_frequency(p, j), std::move(*f)});
  return out;
}

std::vector<ModeReport> classify_modes(const WaveProblem& p, const ClassifierOptions& options) {
  std::vector<ModeReport> out;
  for (const auto& osc : modal_reduce(p)) {
    out.push_back({osc.mode, osc.omega.to_double(), classify(osc.forcing, osc.omega, options)});
  }
  return out;
}

double synthesize(const WaveProblem& p, double x, double t, const std::optional<std::vector<int>>& modes) {
  const double len = p.length.to_double();
  if (!(x >= 0.0 && x <= len)) throw InvalidArgument("synthesize: x must lie in [0, L]");
  if (!(t >= 0.0)) throw InvalidArgument("synthesize: t must be non-negative");
  double total = 0.0;
  for (const auto& osc : modal_reduce(p)) {
    if (modes && std::find(modes->begin(), modes->end(), osc.mode) == modes->end()) continue;
    OscillatorConfig cfg;
    cfg.omega0 = osc.omega;
    total += mode_shape(p, osc.mode, x) * DuhamelSolver(osc.forcing, cfg).at(t).x;
  }
  return total;
}

}  // namespace resonalyze
