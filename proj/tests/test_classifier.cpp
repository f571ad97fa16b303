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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "resonalyze/classifier.hpp"
#include "resonalyze/errors.hpp"
#include "resonalyze/oscillator.hpp"

namespace resonalyze {
namespace {

using testing::Gen;
using testing::kPi;

ScaledReal sr(const char* text) { return ScaledReal::parse(text); }

struct Row {
  const char* label;
  PeriodicForcing f;
  ScaledReal w;
  int case_id;
  Verdict verdict;
};

std::vector<Row> verdict_table() {
  BuiltinParams fi;
  fi.omega = sr("pi");
  return {
      {"triangle T2=4", make_triangle(sr("4")), sr("pi/2"), 4, Verdict::Resonant},
      {"triangle T2=2pi", make_triangle(sr("2pi")), sr("1/2"), 2, Verdict::Periodic},
      {"triangle T2=6", make_triangle(sr("6")), sr("pi"), 4, Verdict::Resonant},
      {"step symmetric", make_step_symmetric(sr("2")), sr("pi"), 4, Verdict::Resonant},
      {"half rectified", make_rect_half(sr("4")), sr("pi"), 4, Verdict::Resonant},
      {"cancellation step", make_cancellation_step(0.5), sr("2pi"), 3, Verdict::Periodic},
      {"sin pi t", make_builtin(BuiltinKind::Sinusoid, fi), sr("1"), 1, Verdict::BoundedNonPeriodic},
      {"full rectified", make_rect_abs(sr("1")), sr("1"), 1, Verdict::BoundedNonPeriodic},
  };
}

TEST(Classifier, ExampleVerdicts) {
  for (const Row& row : verdict_table()) {
    const Classification c = classify(row.f, row.w);
    EXPECT_EQ(c.case_id, row.case_id) << row.label;
    EXPECT_EQ(c.verdict, row.verdict) << row.label;
  }
}

TEST(Classifier, PeriodsAreExact) {
  const Classification c = classify(make_triangle(sr("2pi")), sr("1/2"));
  EXPECT_EQ(c.t1, sr("4pi"));
  EXPECT_EQ(c.t2, sr("2pi"));
  ASSERT_TRUE(c.t3.has_value());
  EXPECT_EQ(*c.t3, sr("4pi"));
  EXPECT_EQ(c.alpha, RatioClass::of(1, 2));
  EXPECT_TRUE(c.sup_bound.has_value());
  EXPECT_FALSE(c.growth_per_cycle.has_value());

  const Classification r = classify(make_triangle(sr("4")), sr("pi/2"));
  EXPECT_EQ(*r.t3, sr("4"));
  EXPECT_NEAR(*r.q1, 16 / (kPi * kPi), 1e-13);
  EXPECT_NEAR(*r.growth_per_cycle, std::hypot(*r.q1, *r.q2) / (kPi / 2), 1e-13);
  EXPECT_FALSE(r.sup_bound.has_value());

  const Classification i = classify(make_rect_abs(sr("1")), sr("1"));
  EXPECT_FALSE(i.alpha.is_rational());
  EXPECT_FALSE(i.t3.has_value());
  EXPECT_FALSE(i.q1.has_value());
}

TEST(Classifier, SupBoundFormula) {
  BuiltinParams p;
  p.omega = sr("pi");
  const PeriodicForcing fi = make_builtin(BuiltinKind::Sinusoid, p);
  const double alpha = 1.0;  // T2 / T1 = 2 / (2 pi) * ... recomputed below
  (void)alpha;
  const double a = 2.0 / (2.0 * kPi);
  const double expected = (2.0 * 2.0 / 1.0) * 1.0 * (2.0 / std::fabs(std::sin(kPi * a)) + 1.0);
  EXPECT_NEAR(sup_bound(fi, sr("1")), expected, 1e-8);
  EXPECT_NEAR(sup_bound(fi, sr("1")), 13.5072, 1e-3);
  EXPECT_THROW(sup_bound(make_triangle(sr("4")), sr("pi/2")), NotApplicable);
  EXPECT_THROW(sup_bound(fi, 1.0, 2.0), NotApplicable);
}

TEST(Classifier, ThresholdControlsZeroTest) {
  // f_m has Q exactly zero up to rounding; a tiny tolerance flips it.
  const PeriodicForcing fm = make_cancellation_step(0.5);
  ClassifierOptions tight;
  tight.q_tol = 1e-30;
  EXPECT_EQ(classify(fm, sr("2pi"), tight).case_id, 4);
  const Classification c = classify(fm, sr("2pi"));
  EXPECT_DOUBLE_EQ(c.q_threshold, 1e-9 * std::max(1.0, c.sup_f * 1.0));
}

TEST(Classifier, RejectsBadInput) {
  const PeriodicForcing tri = make_triangle(sr("4"));
  EXPECT_THROW(classify(tri, sr("0")), InvalidArgument);
  EXPECT_THROW(classify(tri, sr("-1")), InvalidArgument);
  ClassifierOptions bad;
  bad.q_tol = 0.0;
  EXPECT_THROW(classify(tri, sr("1"), bad), InvalidArgument);
}

TEST(Classifier, StrictMinimality) {
  const PeriodicForcing doubled(sr("4pi"), {{0.0, 4 * kPi, {ForcingTerm({1.0}, Trig{TrigKind::Sin, 1.0, 0.0})}}});
  ClassifierOptions strict;
  strict.strict_minimality = true;
  EXPECT_THROW(classify(doubled, sr("1"), strict), InvalidArgument);
  EXPECT_NO_THROW(classify(doubled, sr("1")));
  EXPECT_NO_THROW(classify(make_triangle(sr("4")), sr("pi/2"), strict));
}

// Cases are decided by exact arithmetic, so scaling the frequency by a rational
// keeps rational ratios rational and irrational ones irrational.
TEST(Classifier, CaseMatchesRatioKind) {
  Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    const PeriodicForcing f = gen.forcing();
    const ScaledReal w = ScaledReal::make(gen.integer(1, 12), gen.integer(1, 6), gen.integer(0, 1));
    const Classification c = classify(f, w);
    const RatioClass rk = ratio_kind(f.period(), ScaledReal::pi(2) / w);
    EXPECT_EQ(c.alpha, rk);
    if (!rk.is_rational()) {
      EXPECT_EQ(c.case_id, 1);
    } else if (!rk.is_integer()) {
      EXPECT_EQ(c.case_id, 2);
      EXPECT_EQ(*c.t3, f.period() * ScaledReal(BigRational(rk.rational->n)));
    } else {
      EXPECT_TRUE(c.case_id == 3 || c.case_id == 4);
      EXPECT_EQ(c.case_id == 4, std::max(std::fabs(*c.q1), std::fabs(*c.q2)) > c.q_threshold);
    }
    EXPECT_EQ(c.verdict == Verdict::Resonant, c.case_id == 4);
  }
}

// Bounded verdicts: the simulated response stays under the sup bound.
TEST(Classifier, SupBoundHoldsOnRandomForcings) {
  Gen gen(42);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 25; ++i) {
    const PeriodicForcing f = gen.forcing();
    const ScaledReal w = ScaledReal::make(gen.integer(1, 12), gen.integer(1, 6), gen.integer(0, 1));
    const Classification c = classify(f, w);
    if (c.case_id > 2) continue;
    ++checked;
    OscillatorConfig cfg;
    cfg.omega0 = w;
    const DuhamelSolver solver(f, cfg);
    double peak = 0.0;
    for (int k = 0; k < 5000; ++k) peak = std::max(peak, std::fabs(solver.at(k * 0.2 * f.period_value()).x));
    EXPECT_LE(peak, *c.sup_bound) << f.period().to_string() << " " << w.to_string();
  }
  EXPECT_GT(checked, 10);
}

TEST(Witness, ExceedsLevel) {
  for (const double level : {10.0, 100.0, 1000.0}) {
    for (const auto& [f, w] : {std::pair{make_triangle(sr("4")), sr("pi/2")}, std::pair{make_rect_half(sr("4")), sr("pi")},
                               std::pair{make_step_symmetric(sr("2")), sr("pi")}}) {
      const double t1 = resonance_witness(f, w, level);
      OscillatorConfig cfg;
      cfg.omega0 = w;
      EXPECT_GT(std::fabs(solve_at(f, cfg, t1).x), level) << f.name() << " " << level;
      const State ref = testing::duhamel_oracle(f, w.to_double(), 0.0, 0.0, t1, 1e-11);
      EXPECT_GT(std::fabs(ref.x), level);
    }
  }
}

TEST(Witness, RequiresResonance) {
  EXPECT_THROW(resonance_witness(make_triangle(sr("2pi")), sr("1/2"), 10.0), InvalidState);
  EXPECT_THROW(resonance_witness(make_cancellation_step(0.5), sr("2pi"), 10.0), InvalidState);
}

TEST(Verdict, Names) {
  EXPECT_EQ(verdict_name(Verdict::Resonant), "Resonant");
  EXPECT_EQ(verdict_name(Verdict::Periodic), "Periodic");
  EXPECT_EQ(verdict_name(Verdict::BoundedNonPeriodic), "BoundedNonPeriodic");
}

}  // namespace
}  // namespace resonalyze
