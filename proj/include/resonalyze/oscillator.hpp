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
#include <string>
#include <string_view>
#include <vector>

#include "resonalyze/exactnum.hpp"
#include "resonalyze/forcing.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze {

struct OscillatorConfig {
  ScaledReal omega0 = ScaledReal::integer(1);
  double x0 = 0.0;
  double x1 = 0.0;
  double damping = 0.0;
};

void validate(const OscillatorConfig& cfg);

struct State {
  double x = 0.0;
  double xdot = 0.0;
};

/// Exact solution of x'' + omega0^2 x = f(t), x(0) = x0, x'(0) = x1.
///
/// at() splits t = n T2 + r and combines the one-period prefix table with the
/// closed-form rotation sums, so its cost does not depend on n. at_direct()
/// sums the n per-period contributions one by one and exists as a reference.
class DuhamelSolver {
 public:
  DuhamelSolver(PeriodicForcing f, const OscillatorConfig& cfg);

  State at(double t) const;
  State at_direct(double t) const;

  // (int_0^t f cos(omega0 tau), int_0^t f sin(omega0 tau)) via the fast path.
  std::pair<double, double> integrals(double t) const;

  const PrefixTable& prefix() const { return table_; }
  const PhaseAdvance& phase() const { return phase_; }
  const OscillatorConfig& config() const { return cfg_; }
  double omega0() const { return w_; }

 private:
  State assemble(double phi, double ic, double is) const;

  OscillatorConfig cfg_;
  double w_;
  PrefixTable table_;
  PhaseAdvance phase_;
};

State solve_at(const PeriodicForcing& f, const OscillatorConfig& cfg, double t);

struct SteadyState {
  double c1 = 0.0;
  double c2 = 0.0;
  double x0_tilde = 0.0;
  double x1_tilde = 0.0;
  std::optional<double> peak_omega;  // absent when d^2 >= 2 omega0^2
};

// Particular solution C1 cos(omega t) + C2 sin(omega t) of
// x'' + d x' + omega0^2 x = A0 cos(omega t).
SteadyState damped_steady_state(double a0, double omega, double omega0, double d);

enum class DampingRegime { Underdamped, Critical, Overdamped };

/// Closed-form solution of x'' + d x' + omega0^2 x = A0 trig(omega t + phase), d > 0.
class DampedSolver {
 public:
  DampedSolver(const SinusoidShape& forcing, double omega0, double damping, double x0, double x1);

  State at(double t) const;
  State particular(double t) const;
  // The homogeneous (transient) part alone.
  State transient(double t) const;

  DampingRegime regime() const { return regime_; }
  double decay_rate() const;  // slowest exponential rate of the transient
  double omega_d() const { return rate_; }
  // Initial data that zeroes the transient.
  State compatible_initial() const { return particular(0.0); }

 private:
  double w0_, d_, gamma_;
  double amp_, omega_, psi_;  // forcing A cos(omega t + psi)
  double c1_, c2_;
  DampingRegime regime_;
  double rate_;  // omega_d (under) or kappa (over); 0 when critical
  double y0_, v0_;
};

// Throws UnsupportedCombination when f is not a single sinusoid.
State damped_solve(const PeriodicForcing& f, const OscillatorConfig& cfg, double t);

struct BeatDescriptor {
  double envelope_amplitude = 0.0;
  double modulation_freq = 0.0;
  double carrier_freq = 0.0;
};

// Throws ResonantCase when omega == omega0.
BeatDescriptor beat_descriptor(double a0, double omega, double omega0);

struct Sample {
  double t;
  double x;
  double xdot;
  double f;
};

enum class Method { ExactDuhamel, DampedClosedForm };
std::string_view method_name(Method m);

struct Trajectory {
  std::vector<Sample> samples;
  OscillatorConfig config;
  std::string forcing_name;
  Method method = Method::ExactDuhamel;
};

// Uniform grid t0 + (t1 - t0) i / (count - 1), i = 0..count-1.
Trajectory sample(const PeriodicForcing& f, const OscillatorConfig& cfg, double t0, double t1, int count);
// Samples at t = k * step for k = 0..count-1.
Trajectory sample_multiples(const PeriodicForcing& f, const OscillatorConfig& cfg, double step, int count);

// max_i |E(t_i) - E(t_0) - 2 int_{t_0}^{t_i} f x' dt|, E = omega0^2 x^2 + x'^2,
// with the work integral accumulated by the trapezoid rule on the samples.
double energy_residual(const Trajectory& traj, const PeriodicForcing& f);

// Smallest period found at max|x(t+T) - x(t)| <= tol (1 + sup|x|). With a
// candidate only candidate/k, k = 1..64, is tested; the trajectory must span
// three candidates. Without one, shifts are scanned on the sample grid.
std::optional<double> detect_period(const Trajectory& traj, std::optional<double> candidate, double tol);

// Least-squares slope of x(n T3) against n. Needs >= 10 samples at consecutive
// multiples of T3.
double detect_growth(const Trajectory& traj, double t3);

}  // namespace resonalyze
