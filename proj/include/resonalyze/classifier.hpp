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
#include <string_view>

#include "resonalyze/exactnum.hpp"
#include "resonalyze/forcing.hpp"

namespace resonalyze {

enum class Verdict { BoundedNonPeriodic, Periodic, Resonant };

std::string_view verdict_name(Verdict v);

struct ClassifierOptions {
  double q_tol = 1e-9;
  bool strict_minimality = false;
  int max_divisor = 16;
};

/// Outcome of the four-way case split for x'' + omega0^2 x = f with zero data.
///
/// Periods are kept exact. Q1/Q2 are populated whenever alpha is rational
/// (over T3), supBound for cases 1-2 and growthPerCycle for case 4.
struct Classification {
  int case_id = 0;
  Verdict verdict = Verdict::BoundedNonPeriodic;
  RatioClass alpha;
  double alpha_value = 0.0;
  double omega0 = 0.0;
  ScaledReal omega0_exact;
  ScaledReal t1;
  ScaledReal t2;
  std::optional<ScaledReal> t3;
  std::optional<double> q1;
  std::optional<double> q2;
  std::optional<double> sup_bound;
  std::optional<double> growth_per_cycle;
  double q_tolerance = 1e-9;
  double q_threshold = 0.0;  // q_tolerance * max(1, sup|f| T3)
  double sup_f = 0.0;
};

// Throws InvalidArgument for omega0 <= 0 or q_tol <= 0, and in strict mode when
// the declared forcing period fails the numeric minimality check.
Classification classify(const PeriodicForcing& f, const ScaledReal& omega0, const ClassifierOptions& options = {});

// (2 T2 / omega0) sup|f| (2/|sin(pi alpha)| + 1). Throws NotApplicable for alpha in N.
double sup_bound(const PeriodicForcing& f, double omega0, double alpha);
double sup_bound(const PeriodicForcing& f, const ScaledReal& omega0);

/// A time t1 with |x(t1)| > L for the zero-data solution of a resonant system.
/// Uses the sine branch when Q1 clears the zero threshold, otherwise the cosine
/// branch with its quarter natural period offset. Throws InvalidState unless
/// the classification is case 4.
double resonance_witness(const PeriodicForcing& f, const Classification& c, double level);
double resonance_witness(const PeriodicForcing& f, const ScaledReal& omega0, double level,
                         const ClassifierOptions& options = {});

}  // namespace resonalyze
