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

#include "resonalyze/laplace.hpp"

#include <cmath>
#include <numbers>

#include "resonalyze/errors.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze {

namespace {

// 1 - e^{-w}, accurate for small |w|.
Complex one_minus_exp(Complex w) {
  if (std::abs(w) < 1e-3) {
    Complex term = w;
    Complex sum = 0.0;
    for (int k = 1; k <= 8; ++k) {
      sum += term;
      term *= -w / static_cast<double>(k + 1);
    }
    return sum;
  }
  return 1.0 - std::exp(-w);
}

}  // namespace

Complex period_numerator(const PeriodicForcing& f, Complex s) {
  Complex total = 0.0;
  for (const auto& seg : f.segments()) {
    for (const auto& term : seg.terms) total += term_exp_integral(term, -s, seg.start, seg.end);
  }
  return total;
}

Complex periodic_transform(const PeriodicForcing& f, Complex s) {
  const Complex num = period_numerator(f, s);
  const Complex den = one_minus_exp(s * f.period_value());
  if (std::abs(den) <= kPoleThreshold) throw PoleProximity("periodic_transform: s on the forcing pole lattice", num);
  return num / den;
}

Complex solution_transform(const PeriodicForcing& f, double omega0, Complex s) {
  if (!(omega0 > 0.0)) throw InvalidArgument("solution_transform: omega0 must be positive");
  const Complex q = s * s + omega0 * omega0;
  if (std::abs(q) <= kPoleThreshold) {
    throw PoleProximity("solution_transform: s at +-i omega0", period_numerator(f, s));
  }
  return periodic_transform(f, s) / q;
}

Complex pole_numerator(const PeriodicForcing& f, double omega0, double t3) {
  if (!(omega0 > 0.0)) throw InvalidArgument("pole_numerator: omega0 must be positive");
  const double t2 = f.period_value();
  const double periods = std::round(t3 / t2);
  if (!(periods >= 1.0) || std::fabs(periods * t2 - t3) > 1e-9 * t3) {
    throw InvalidArgument("pole_numerator: T3 must be a positive integer multiple of T2");
  }
  const double cycles = omega0 * t3 / (2.0 * std::numbers::pi);
  if (std::fabs(cycles - std::round(cycles)) > 1e-9 * std::max(1.0, cycles) || std::round(cycles) < 1.0) {
    throw InvalidArgument("pole_numerator: omega0 T3 must be a positive multiple of 2 pi");
  }
  const PhaseAdvance phase(omega0 * t2 / (2.0 * std::numbers::pi));
  const auto [c, s] = phase.partial_sums(static_cast<std::int64_t>(periods));
  return period_numerator(f, Complex(0.0, omega0)) * Complex(c, -s);
}

Complex pole_numerator(const PeriodicForcing& f, const ScaledReal& omega0, std::int64_t periods) {
  if (omega0.sign() <= 0) throw InvalidArgument("pole_numerator: omega0 must be positive");
  if (periods < 1) throw InvalidArgument("pole_numerator: period count must be positive");
  const ScaledReal t3 = f.period() * ScaledReal::integer(periods);
  const RatioClass cycles = ratio_kind(t3, ScaledReal::pi(2) / omega0);
  if (!cycles.is_integer()) throw InvalidArgument("pole_numerator: omega0 T3 must be a multiple of 2 pi");
  const PhaseAdvance phase(omega0 * f.period() / ScaledReal::pi(2));
  const auto [c, s] = phase.partial_sums(periods);
  return period_numerator(f, Complex(0.0, omega0.to_double())) * Complex(c, -s);
}

Verdict laplace_verdict(const PeriodicForcing& f, const ScaledReal& omega0, double q_tol) {
  if (omega0.sign() <= 0) throw InvalidArgument("laplace_verdict: omega0 must be positive");
  const RatioClass alpha = ratio_kind(f.period(), ScaledReal::pi(2) / omega0);
  if (!alpha.is_rational()) return Verdict::BoundedNonPeriodic;
  if (!alpha.is_integer()) return Verdict::Periodic;
  const Complex num = pole_numerator(f, omega0, 1);
  const double threshold = q_tol * std::max(1.0, sup_norm(f) * f.period_value());
  return std::max(std::fabs(num.real()), std::fabs(num.imag())) <= threshold ? Verdict::Periodic : Verdict::Resonant;
}

}  // namespace resonalyze
