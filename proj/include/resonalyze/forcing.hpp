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
#include <span>
#include <string>
#include <vector>

#include "resonalyze/exactnum.hpp"

namespace resonalyze {

enum class TrigKind { Sin, Cos };

struct Trig {
  TrigKind kind = TrigKind::Sin;
  double freq = 1.0;  // rad/s, > 0
  double phase = 0.0;
};

/// (c0 + c1 t + ... + cP t^P) * trig(freq t + phase), t local to the period.
class ForcingTerm {
 public:
  explicit ForcingTerm(std::vector<double> poly, std::optional<Trig> trig = std::nullopt);

  static ForcingTerm constant(double c) { return ForcingTerm({c}); }

  const std::vector<double>& poly() const { return poly_; }
  const std::optional<Trig>& trig() const { return trig_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }

  double operator()(double t) const;
  ForcingTerm scaled(double c) const;

 private:
  std::vector<double> poly_;
  std::optional<Trig> trig_;
};

struct ForcingSegment {
  double start = 0.0;
  double end = 0.0;
  std::vector<ForcingTerm> terms;  // empty means the zero function

  double value(double t) const;
};

struct SinusoidShape {
  double amplitude;
  double omega;
  TrigKind kind;
  double phase;
};

/// Periodic forcing with minimal period T2 given piecewise on [0, T2).
///
/// Segment starts are closed and ends open, so at a jump the value is the right
/// limit. The constructor validates that the segments partition [0, T2) and
/// rejects constant functions, which have no minimal period.
class PeriodicForcing {
 public:
  PeriodicForcing(ScaledReal period, std::vector<ForcingSegment> segments, std::string name = "custom");

  const ScaledReal& period() const { return period_; }
  double period_value() const { return period_value_; }
  std::span<const ForcingSegment> segments() const { return segments_; }
  const std::string& name() const { return name_; }
  const PeriodReducer& reducer() const { return reducer_; }

  // Periodic extension, t >= 0.
  double evaluate(double t) const;
  double operator()(double t) const { return evaluate(t); }

  // Value on the base period; r in [0, T2).
  double evaluate_local(double r) const;
  std::size_t segment_index(double r) const;

  PeriodicForcing scaled(double c) const;

  // Pointwise sum of two forcings with the same exact period.
  friend PeriodicForcing operator+(const PeriodicForcing& a, const PeriodicForcing& b);

  // Set when the forcing is a single amplitude * trig(omega t + phase).
  std::optional<SinusoidShape> as_sinusoid() const;

 private:
  ScaledReal period_;
  double period_value_;
  std::vector<ForcingSegment> segments_;
  std::string name_;
  PeriodReducer reducer_;
};

// Builtins. Each reproduces one closed-form example forcing exactly.
PeriodicForcing make_sinusoid(double amplitude, const ScaledReal& omega, TrigKind kind = TrigKind::Sin,
                              double phase = 0.0);
// Odd unit triangle wave: 4t/T on [0,T/4], 2-4t/T on [T/4,3T/4], 4t/T-4 on [3T/4,T].
PeriodicForcing make_triangle(const ScaledReal& period);
// 1 on [0,T/4) and [3T/4,T), 0 between.
PeriodicForcing make_step_symmetric(const ScaledReal& period);
// |sin(2 pi t / T0)|, minimal period T0/2.
PeriodicForcing make_rect_abs(const ScaledReal& t0);
// max(sin(2 pi t / T0), 0), period T0.
PeriodicForcing make_rect_half(const ScaledReal& t0);
// Two-level step with zero first-harmonic content: B on [T/16,3T/16), A on [3T/8,7T/8).
PeriodicForcing make_cancellation_step(double level_a, const ScaledReal& period = ScaledReal::integer(1));

// Level B that cancels both first-harmonic inner products of the cancellation step.
double derive_cancellation_level(double level_a);

enum class BuiltinKind { Sinusoid, Triangle, StepSymmetric, RectAbs, RectHalf, CancellationStep };

struct BuiltinParams {
  double amplitude = 1.0;
  std::optional<ScaledReal> omega;
  TrigKind kind = TrigKind::Sin;
  double phase = 0.0;
  std::optional<ScaledReal> period;  // triangle, step_symmetric, cancellation_step
  std::optional<ScaledReal> t0;      // rect_abs, rect_half
  double level_a = 0.5;              // cancellation_step
};

PeriodicForcing make_builtin(BuiltinKind kind, const BuiltinParams& params);
std::optional<BuiltinKind> builtin_from_name(std::string_view name);
std::string_view builtin_name(BuiltinKind kind);

// Upper bound on sup |f| over one period, tight to ~1e-6 relative.
double sup_norm(const PeriodicForcing& f);

// True iff no T2/k with 2 <= k <= max_divisor is numerically a period.
bool verify_minimal_period(const PeriodicForcing& f, int max_divisor = 16);

}  // namespace resonalyze
