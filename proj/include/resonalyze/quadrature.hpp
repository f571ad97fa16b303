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

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "resonalyze/exactnum.hpp"
#include "resonalyze/forcing.hpp"

namespace resonalyze {

/// Closed-form integral of p(tau) * exp(z tau) over [a, b].
///
/// The polynomial is re-centred on the interval midpoint and integrated
/// against exponential moments. Small |z|(b-a) uses the power series of the
/// moments, so the result is continuous through z = 0 (equal-frequency
/// products yield the secular polynomial terms without any 0/0).
std::complex<double> poly_exp_integral(std::span<const double> poly, std::complex<double> z, double a, double b);

// Integral over [a, b] of p(tau) * cos(mu tau + psi).
double poly_cos_integral(std::span<const double> poly, double mu, double psi, double a, double b);

// Integral over [a, b] of term(tau) * kind(omega0 tau).
double term_integral(const ForcingTerm& term, double omega0, TrigKind kind, double a, double b);

// Integral over [a, b] ⊆ [seg.start, seg.end] of seg(tau) * kind(omega0 tau).
double segment_integral(const ForcingSegment& seg, double omega0, TrigKind kind, double a, double b);

// Integral over [a, b] of term(tau) * exp(z tau), z complex.
std::complex<double> term_exp_integral(const ForcingTerm& term, std::complex<double> z, double a, double b);

/// Rotation by 2*pi*alpha per forcing period, where alpha = omega0 * T2 / (2 pi).
///
/// Holds alpha as a double-double (and as m/n when rational) so that
/// 2*pi*frac(k*alpha) stays accurate for k in the millions, and evaluates the
/// partial sums sum_{k<n} cos(2 pi k alpha), sum_{k<n} sin(2 pi k alpha) in
/// closed form.
class PhaseAdvance {
 public:
  PhaseAdvance() = default;
  explicit PhaseAdvance(const ScaledReal& alpha);
  explicit PhaseAdvance(double alpha);

  // 2*pi*frac(k*alpha) mapped to [-pi, pi).
  double angle(std::int64_t k) const;
  // (sum_{j=0}^{n-1} cos(j w), sum_{j=0}^{n-1} sin(j w)), w = 2 pi alpha.
  std::pair<double, double> partial_sums(std::int64_t n) const;

  bool is_integer() const { return integer_; }
  double alpha() const { return alpha_.value(); }

 private:
  // 2*pi*frac(x) for x = k*alpha/2^shift; shift selects half-angles.
  double turn_angle(std::int64_t k, int halves) const;

  DoubleDouble alpha_{};
  bool integer_ = false;
  bool rational_ = false;
  std::int64_t num_ = 0;  // alpha = num_/den_ when rational_
  std::int64_t den_ = 1;
};

/// One-period cumulative Duhamel integrals
/// I_c(r) = int_0^r f cos(omega0 tau) dtau, I_s(r) = int_0^r f sin(omega0 tau) dtau.
class PrefixTable {
 public:
  struct Breakpoint {
    double tau;
    double ic;
    double is;
  };

  PrefixTable(PeriodicForcing f, double omega0);

  double omega0() const { return omega0_; }
  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  double per_period_cos() const { return pc_; }
  double per_period_sin() const { return ps_; }
  const PeriodicForcing& forcing() const { return forcing_; }

  // (I_c(r), I_s(r)) for r in [0, T2].
  std::pair<double, double> cumulative(double r) const;

 private:
  PeriodicForcing forcing_;
  double omega0_;
  std::vector<Breakpoint> breakpoints_;
  double pc_ = 0.0;
  double ps_ = 0.0;
};

PrefixTable build_prefix(const PeriodicForcing& f, double omega0);

struct Projection {
  double q1 = 0.0;  // (f, sin omega0 t) over [0, T3]
  double q2 = 0.0;  // (f, cos omega0 t) over [0, T3]
  double t3 = 0.0;
};

// T3 must be a positive integer multiple of T2 (checked to 1e-9 relative).
Projection project(const PeriodicForcing& f, double omega0, double t3);
// Exact variant: the per-period rotation uses the exact ratio omega0*T2/(2 pi).
Projection project(const PeriodicForcing& f, const ScaledReal& omega0, std::int64_t periods);

struct AdaptiveOptions {
  int max_intervals = 20000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature with absolute tolerance.
/// Throws AccuracyFailure with the best estimate when the tolerance cannot be
/// met before the interval budget is exhausted or intervals shrink to machine width.
double adaptive_integral(const std::function<double(double)>& g, double a, double b, double tol,
                         AdaptiveOptions options = {});

}  // namespace resonalyze
