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

#include "resonalyze/classifier.hpp"

#include <cmath>
#include <numbers>

#include "resonalyze/errors.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::BoundedNonPeriodic:
      return "BoundedNonPeriodic";
    case Verdict::Periodic:
      return "Periodic";
    case Verdict::Resonant:
      return "Resonant";
  }
  return "unknown";
}

namespace {

double bound_formula(double t2, double omega0, double sup_f, double alpha) {
  return (2.0 * t2 / omega0) * sup_f * (2.0 / std::fabs(std::sin(std::numbers::pi * alpha)) + 1.0);
}

}  // namespace

Classification classify(const PeriodicForcing& f, const ScaledReal& omega0, const ClassifierOptions& options) {
  if (omega0.sign() <= 0) throw InvalidArgument("classify: omega0 must be positive");
  if (!(options.q_tol > 0.0)) throw InvalidArgument("classify: qTol must be positive");
  if (options.strict_minimality && !verify_minimal_period(f, options.max_divisor)) {
    throw InvalidArgument("classify: declared forcing period " + f.period().to_string() + " is not minimal");
  }

  Classification c;
  c.omega0_exact = omega0;
  c.omega0 = omega0.to_double();
  c.t1 = ScaledReal::pi(2) / omega0;
  c.t2 = f.period();
  c.alpha = ratio_kind(c.t2, c.t1);
  c.alpha_value = (c.t2 / c.t1).to_double();
  c.q_tolerance = options.q_tol;
  c.sup_f = sup_norm(f);

  if (!c.alpha.is_rational()) {
    c.case_id = 1;
    c.verdict = Verdict::BoundedNonPeriodic;
    c.sup_bound = bound_formula(c.t2.to_double(), c.omega0, c.sup_f, c.alpha_value);
    return c;
  }

  const auto& ratio = *c.alpha.rational;
  const BigInt n = ratio.n;
  if (n > BigInt(std::numeric_limits<std::int32_t>::max())) {
    throw NoExactRepresentation("classify: coincident period multiplier too large", 0.0);
  }
  const std::int64_t periods = n.convert_to<std::int64_t>();
  c.t3 = c.t2 * ScaledReal::make(n, 1);
  const double t3 = c.t3->to_double();
  const Projection proj = project(f, omega0, periods);
  c.q1 = proj.q1;
  c.q2 = proj.q2;
  c.q_threshold = options.q_tol * std::max(1.0, c.sup_f * t3);

  if (periods >= 2) {
    c.case_id = 2;
    c.verdict = Verdict::Periodic;
    c.sup_bound = bound_formula(c.t2.to_double(), c.omega0, c.sup_f, c.alpha_value);
    return c;
  }
  if (std::max(std::fabs(proj.q1), std::fabs(proj.q2)) <= c.q_threshold) {
    c.case_id = 3;
    c.verdict = Verdict::Periodic;
    return c;
  }
  c.case_id = 4;
  c.verdict = Verdict::Resonant;
  c.growth_per_cycle = std::hypot(proj.q1, proj.q2) / c.omega0;
  return c;
}

double sup_bound(const PeriodicForcing& f, double omega0, double alpha) {
  if (!(omega0 > 0.0)) throw InvalidArgument("sup_bound: omega0 must be positive");
  if (alpha == std::round(alpha)) throw NotApplicable("sup_bound: undefined for integer period ratio");
  return bound_formula(f.period_value(), omega0, sup_norm(f), alpha);
}

double sup_bound(const PeriodicForcing& f, const ScaledReal& omega0) {
  if (omega0.sign() <= 0) throw InvalidArgument("sup_bound: omega0 must be positive");
  const ScaledReal alpha = f.period() * omega0 / ScaledReal::pi(2);
  if (ratio_kind(f.period(), ScaledReal::pi(2) / omega0).is_integer()) {
    throw NotApplicable("sup_bound: undefined for integer period ratio");
  }
  return bound_formula(f.period_value(), omega0.to_double(), sup_norm(f), alpha.to_double());
}

double resonance_witness(const PeriodicForcing& f, const Classification& c, double level) {
  if (c.case_id != 4) throw InvalidState("resonance_witness: system is not resonant");
  if (!(level > 0.0)) throw InvalidArgument("resonance_witness: L must be positive");
  const double t3 = c.t3->to_double();
  const double w = c.omega0;
  const double q1 = *c.q1;
  const double q2 = *c.q2;
  if (std::fabs(q1) > c.q_threshold) {
    return t3 * (std::floor(w * level / std::fabs(q1)) + 2.0);
  }
  const double quarter = c.t1.to_double() / 4.0;
  const PrefixTable table(f, w);
  const double a = table.cumulative(quarter).first;
  return t3 * (std::ceil((w * level + std::fabs(a)) / std::fabs(q2)) + 1.0) + quarter;
}

double resonance_witness(const PeriodicForcing& f, const ScaledReal& omega0, double level,
                         const ClassifierOptions& options) {
  return resonance_witness(f, classify(f, omega0, options), level);
}

}  // namespace resonalyze
