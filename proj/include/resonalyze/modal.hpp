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

#pragma once

#include <optional>
#include <vector>

#include "resonalyze/classifier.hpp"
#include "resonalyze/exactnum.hpp"
#include "resonalyze/forcing.hpp"

namespace resonalyze {

struct ModalForcing {
  int mode = 1;
  double coefficient = 1.0;
  PeriodicForcing profile;
};

/// w_tt = c^2 w_xx + F(x, t) on (0, L), w = 0 at both ends, zero initial data,
/// with F given in the eigenbasis phi_j = sqrt(2/L) sin(j pi x / L).
struct WaveProblem {
  ScaledReal length = ScaledReal::pi();
  ScaledReal speed = ScaledReal::integer(1);
  int mode_count = 1;
  std::vector<ModalForcing> forcing;
};

void validate(const WaveProblem& p);

struct ModalOscillator {
  int mode;
  ScaledReal omega;  // c j pi / L
  PeriodicForcing forcing;
};

struct ModeReport {
  int mode;
  double omega;
  Classification classification;
};

ScaledReal mode_frequency(const WaveProblem& p, int j);
double mode_shape(const WaveProblem& p, int j, double x);

// One oscillator per forced mode, ascending j; same-mode terms are summed and
// zero coefficients dropped.
std::vector<ModalOscillator> modal_reduce(const WaveProblem& p);

std::vector<ModeReport> classify_modes(const WaveProblem& p, const ClassifierOptions& options = {});

// Truncated sum over `modes` (all forced modes when empty optional) of phi_j(x) g_j(t).
double synthesize(const WaveProblem& p, double x, double t, const std::optional<std::vector<int>>& modes = std::nullopt);

}  // namespace resonalyze
