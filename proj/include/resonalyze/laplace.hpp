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

#include "resonalyze/classifier.hpp"
#include "resonalyze/exactnum.hpp"
#include "resonalyze/forcing.hpp"

namespace resonalyze {

using Complex = std::complex<double>;

inline constexpr double kPoleThreshold = 1e-12;

// int_0^{T2} e^{-s t} f(t) dt in closed form.
Complex period_numerator(const PeriodicForcing& f, Complex s);

/// F(s) = int_0^{T2} e^{-st} f dt / (1 - e^{-s T2}).
/// Throws PoleProximity (carrying the numerator) when |1 - e^{-s T2}| <= 1e-12.
Complex periodic_transform(const PeriodicForcing& f, Complex s);

/// X(s) = F(s) / (s^2 + omega0^2) for zero initial data.
/// Throws PoleProximity when |s^2 + omega0^2| <= 1e-12 or F has a pole at s.
Complex solution_transform(const PeriodicForcing& f, double omega0, Complex s);

/// int_0^{T3} e^{-i omega0 t} f(t) dt, which equals Q2 - i Q1.
/// T3 must be a multiple of T2 with omega0 T3 in 2 pi N (both to 1e-9 relative).
Complex pole_numerator(const PeriodicForcing& f, double omega0, double t3);
Complex pole_numerator(const PeriodicForcing& f, const ScaledReal& omega0, std::int64_t periods);

/// Verdict read from the pole structure of X(s): a coincident pole at i omega0
/// exists iff alpha in N, and it survives iff the pole numerator is nonzero at
/// the classifier's threshold.
Verdict laplace_verdict(const PeriodicForcing& f, const ScaledReal& omega0, double q_tol = 1e-9);

}  // namespace resonalyze
