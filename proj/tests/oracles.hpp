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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "resonalyze/forcing.hpp"
#include "resonalyze/oscillator.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze::testing {

inline constexpr double kPi = std::numbers::pi;

// Integral of g over [a, b] split at the forcing breakpoints, so each adaptive
// call sees a smooth integrand. `tol` applies to each piece.
template <typename G>
double piecewise_integral(const PeriodicForcing& f, G&& g, double a, double b, double tol) {
  const double t2 = f.period_value();
  std::vector<double> cuts{a};
  const auto first = static_cast<std::int64_t>(std::floor(a / t2));
  const auto last = static_cast<std::int64_t>(std::floor(b / t2));
  for (std::int64_t k = first; k <= last; ++k) {
    for (const auto& seg : f.segments()) {
      const double c = static_cast<double>(k) * t2 + seg.start;
      if (c > a && c < b) cuts.push_back(c);
    }
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi <= lo) continue;
    // Evaluate f from the right-open side of each piece.
    const double mid = 0.5 * (lo + hi);
    const double base = static_cast<double>(static_cast<std::int64_t>(std::floor(mid / t2))) * t2;
    const auto& seg = f.segments()[f.segment_index(mid - base)];
    total += adaptive_integral([&](double tau) { return g(tau, seg.value(tau - base)); }, lo, hi, tol);
  }
  return total;
}

// Duhamel formula evaluated by adaptive quadrature, independent of the prefix table.
inline State duhamel_oracle(const PeriodicForcing& f, double w, double x0, double x1, double t, double tol = 1e-12) {
  const double ix = piecewise_integral(f, [&](double tau, double v) { return std::sin(w * (t - tau)) * v; }, 0.0, t, tol);
  const double iv = piecewise_integral(f, [&](double tau, double v) { return std::cos(w * (t - tau)) * v; }, 0.0, t, tol);
  return {x0 * std::cos(w * t) + (x1 / w) * std::sin(w * t) + ix / w, -x0 * w * std::sin(w * t) + x1 * std::cos(w * t) + iv};
}

// Integral over [0, T2] of f(tau) * kind(w tau) by adaptive quadrature.
inline double period_oracle(const PeriodicForcing& f, double w, TrigKind kind, double tol = 1e-13) {
  return piecewise_integral(
      f, [&](double tau, double v) { return v * (kind == TrigKind::Sin ? std::sin(w * tau) : std::cos(w * tau)); },
      0.0, f.period_value(), tol);
}

// Hand-rolled generators over a fixed-seed engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // p/q * pi^e with small p, q and e in {0, 1}.
  ScaledReal period() {
    return ScaledReal::make(integer(1, 12), integer(1, 6), coin() ? 1 : 0);
  }

  ForcingTerm term(double period) {
    std::vector<double> poly;
    const int degree = integer(0, 2);
    for (int k = 0; k <= degree; ++k) poly.push_back(uniform(-1.0, 1.0) / std::pow(period, k));
    if (poly.back() == 0.0) poly.back() = 0.5;
    if (coin()) {
      const TrigKind kind = coin() ? TrigKind::Sin : TrigKind::Cos;
      return ForcingTerm(poly, Trig{kind, uniform(0.1, 8.0), uniform(-kPi, kPi)});
    }
    return ForcingTerm(poly);
  }

  ForcingSegment segment(double start, double end, double period) {
    ForcingSegment seg{start, end, {}};
    const int n = integer(1, 2);
    for (int i = 0; i < n; ++i) seg.terms.push_back(term(period));
    return seg;
  }

  // A random piecewise forcing whose first segment carries a linear ramp, so it is never constant.
  PeriodicForcing forcing() {
    const ScaledReal p = period();
    const double t = p.to_double();
    const int pieces = integer(1, 4);
    std::vector<double> cuts{0.0};
    for (int i = 1; i < pieces; ++i) cuts.push_back(t * uniform(0.05, 0.95));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(t);
    std::vector<ForcingSegment> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] - cuts[i] < 1e-6 * t) continue;
      segs.push_back(segment(segs.empty() ? 0.0 : cuts[i], cuts[i + 1], t));
    }
    segs.back().end = t;
    segs.front().terms.push_back(ForcingTerm({0.0, 1.0 / t}));
    return PeriodicForcing(p, std::move(segs), "random");
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace resonalyze::testing
