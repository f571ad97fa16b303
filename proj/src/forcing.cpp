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

#include "resonalyze/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "resonalyze/errors.hpp"

namespace resonalyze {

namespace {

constexpr double kPartitionTol = 1e-12;

double at_fraction(const ScaledReal& period, std::int64_t num, std::int64_t den) {
  return (period * ScaledReal::make(num, den)).to_double();
}

double trig_value(const Trig& trig, double t) {
  const double arg = trig.freq * t + trig.phase;
  return trig.kind == TrigKind::Sin ? std::sin(arg) : std::cos(arg);
}

double poly_value(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

// Sum over terms of sum_k |c_k| max(|a|,|b|)^k; valid however the trig factors oscillate.
double coefficient_bound(const ForcingSegment& seg) {
  const double x = std::max(std::fabs(seg.start), std::fabs(seg.end));
  double total = 0.0;
  for (const auto& term : seg.terms) {
    double p = 1.0;
    for (double c : term.poly()) {
      total += std::fabs(c) * p;
      p *= x;
    }
  }
  return total;
}

double segment_sup(const ForcingSegment& seg) {
  if (seg.terms.empty()) return 0.0;
  const double len = seg.end - seg.start;
  int degree = 0;
  double max_freq = 0.0;
  for (const auto& term : seg.terms) {
    degree = std::max(degree, term.degree());
    if (term.trig()) max_freq = std::max(max_freq, term.trig()->freq);
  }
  const double oscillations = max_freq * len / std::numbers::pi;
  if (oscillations > 2000.0) return coefficient_bound(seg);

  const int n = 64 + 8 * degree + static_cast<int>(std::ceil(16.0 * oscillations));
  std::vector<double> ts(n + 1), vs(n + 1);
  for (int i = 0; i <= n; ++i) {
    ts[i] = (i == n) ? seg.end : seg.start + len * i / n;
    vs[i] = std::fabs(seg.value(ts[i]));
  }
  double best = *std::max_element(vs.begin(), vs.end());

  // Refine the largest sampled local maxima with Brent's method.
  std::vector<int> peaks;
  for (int i = 0; i <= n; ++i) {
    const bool left_ok = i == 0 || vs[i] >= vs[i - 1];
    const bool right_ok = i == n || vs[i] >= vs[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vs[a] > vs[b]; });
  if (peaks.size() > 8) peaks.resize(8);
  for (int i : peaks) {
    const double lo = ts[std::max(i - 1, 0)];
    const double hi = ts[std::min(i + 1, n)];
    auto neg_abs = [&](double t) { return -std::fabs(seg.value(t)); };
    const auto [t_star, v_star] = boost::math::tools::brent_find_minima(neg_abs, lo, hi, 52);
    best = std::max(best, -v_star);
  }
  return best;
}

}  // namespace

ForcingTerm::ForcingTerm(std::vector<double> poly, std::optional<Trig> trig)
    : poly_(std::move(poly)), trig_(trig) {
  while (poly_.size() > 1 && poly_.back() == 0.0) poly_.pop_back();
  if (poly_.empty()) throw InvalidArgument("forcing term needs at least one polynomial coefficient");
  for (double c : poly_) {
    if (!std::isfinite(c)) throw InvalidArgument("forcing term coefficient is not finite");
  }
  if (trig_) {
    if (!(trig_->freq > 0.0) || !std::isfinite(trig_->freq)) {
      throw InvalidArgument("forcing term trig frequency must be positive");
    }
    if (!std::isfinite(trig_->phase)) throw InvalidArgument("forcing term phase is not finite");
  }
}

double ForcingTerm::operator()(double t) const {
  const double p = poly_value(poly_, t);
  return trig_ ? p * trig_value(*trig_, t) : p;
}

ForcingTerm ForcingTerm::scaled(double c) const {
  std::vector<double> poly = poly_;
  for (double& v : poly) v *= c;
  return ForcingTerm(std::move(poly), trig_);
}

double ForcingSegment::value(double t) const {
  double v = 0.0;
  for (const auto& term : terms) v += term(t);
  return v;
}

PeriodicForcing::PeriodicForcing(ScaledReal period, std::vector<ForcingSegment> segments, std::string name)
    : period_(std::move(period)), segments_(std::move(segments)), name_(std::move(name)) {
  if (period_.sign() <= 0) throw InvalidArgument("forcing period must be positive");
  period_value_ = period_.to_double();
  reducer_ = PeriodReducer(period_);
  if (segments_.empty()) throw InvalidArgument("forcing needs at least one segment");

  const double tol = kPartitionTol * period_value_;
  if (std::fabs(segments_.front().start) > tol) {
    throw InvalidArgument("first segment must start at 0");
  }
  segments_.front().start = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    auto& seg = segments_[i];
    if (!(seg.end > seg.start)) {
      throw InvalidArgument("segment " + std::to_string(i) + " has end <= start");
    }
    if (i + 1 < segments_.size()) {
      if (std::fabs(segments_[i + 1].start - seg.end) > tol) {
        throw InvalidArgument("segments " + std::to_string(i) + " and " + std::to_string(i + 1) +
                              " leave a gap or overlap");
      }
      segments_[i + 1].start = seg.end;
    }
  }
  if (std::fabs(segments_.back().end - period_value_) > tol) {
    throw InvalidArgument("segments must end at the period");
  }
  segments_.back().end = period_value_;

  // A constant has no minimal period.
  const int n = 512;
  const double first = evaluate_local(0.0);
  bool constant = true;
  for (int i = 1; i < n && constant; ++i) {
    constant = evaluate_local(period_value_ * i / n) == first;
  }
  for (const auto& seg : segments_) {
    if (!constant) break;
    constant = seg.value(0.5 * (seg.start + seg.end)) == first;
  }
  if (constant) throw InvalidArgument("forcing '" + name_ + "' is constant and has no minimal period");
}

std::size_t PeriodicForcing::segment_index(double r) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), r,
                             [](double v, const ForcingSegment& s) { return v < s.start; });
  if (it == segments_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(segments_.begin(), it) - 1);
}

double PeriodicForcing::evaluate_local(double r) const { return segments_[segment_index(r)].value(r); }

double PeriodicForcing::evaluate(double t) const { return evaluate_local(reducer_.reduce(t).remainder); }

PeriodicForcing PeriodicForcing::scaled(double c) const {
  if (c == 0.0 || !std::isfinite(c)) throw InvalidArgument("forcing scale must be finite and nonzero");
  std::vector<ForcingSegment> segs = segments_;
  for (auto& seg : segs) {
    for (auto& term : seg.terms) term = term.scaled(c);
  }
  return PeriodicForcing(period_, std::move(segs), name_);
}

PeriodicForcing operator+(const PeriodicForcing& a, const PeriodicForcing& b) {
  if (!(a.period_ == b.period_)) throw InvalidArgument("cannot add forcings with different periods");
  std::vector<double> cuts;
  for (const auto* f : {&a, &b}) {
    for (const auto& seg : f->segments_) cuts.push_back(seg.start);
  }
  cuts.push_back(a.period_value_);
  std::sort(cuts.begin(), cuts.end());
  const double tol = kPartitionTol * a.period_value_;
  std::vector<double> unique;
  for (double c : cuts) {
    if (unique.empty() || c - unique.back() > tol) unique.push_back(c);
  }
  unique.back() = a.period_value_;

  std::vector<ForcingSegment> segs;
  for (std::size_t i = 0; i + 1 < unique.size(); ++i) {
    const double mid = 0.5 * (unique[i] + unique[i + 1]);
    ForcingSegment seg{unique[i], unique[i + 1], {}};
    for (const auto* f : {&a, &b}) {
      const auto& src = f->segments_[f->segment_index(mid)];
      seg.terms.insert(seg.terms.end(), src.terms.begin(), src.terms.end());
    }
    segs.push_back(std::move(seg));
  }
  return PeriodicForcing(a.period_, std::move(segs), a.name_ + "+" + b.name_);
}

std::optional<SinusoidShape> PeriodicForcing::as_sinusoid() const {
  if (segments_.size() != 1 || segments_[0].terms.size() != 1) return std::nullopt;
  const auto& term = segments_[0].terms[0];
  if (term.poly().size() != 1 || !term.trig()) return std::nullopt;
  return SinusoidShape{term.poly()[0], term.trig()->freq, term.trig()->kind, term.trig()->phase};
}

PeriodicForcing make_sinusoid(double amplitude, const ScaledReal& omega, TrigKind kind, double phase) {
  if (omega.sign() <= 0) throw InvalidArgument("sinusoid frequency must be positive");
  if (amplitude == 0.0) throw InvalidArgument("sinusoid with zero amplitude is constant");
  const ScaledReal period = ScaledReal::pi(2) / omega;
  ForcingSegment seg{0.0, period.to_double(), {ForcingTerm({amplitude}, Trig{kind, omega.to_double(), phase})}};
  return PeriodicForcing(period, {std::move(seg)}, "sinusoid");
}

PeriodicForcing make_triangle(const ScaledReal& period) {
  if (period.sign() <= 0) throw InvalidArgument("triangle period must be positive");
  const double t = period.to_double();
  const double q1 = at_fraction(period, 1, 4);
  const double q3 = at_fraction(period, 3, 4);
  std::vector<ForcingSegment> segs{
      {0.0, q1, {ForcingTerm({0.0, 4.0 / t})}},
      {q1, q3, {ForcingTerm({2.0, -4.0 / t})}},
      {q3, t, {ForcingTerm({-4.0, 4.0 / t})}},
  };
  return PeriodicForcing(period, std::move(segs), "triangle");
}

PeriodicForcing make_step_symmetric(const ScaledReal& period) {
  if (period.sign() <= 0) throw InvalidArgument("step period must be positive");
  const double q1 = at_fraction(period, 1, 4);
  const double q3 = at_fraction(period, 3, 4);
  std::vector<ForcingSegment> segs{
      {0.0, q1, {ForcingTerm::constant(1.0)}},
      {q1, q3, {}},
      {q3, period.to_double(), {ForcingTerm::constant(1.0)}},
  };
  return PeriodicForcing(period, std::move(segs), "step_symmetric");
}

PeriodicForcing make_rect_abs(const ScaledReal& t0) {
  if (t0.sign() <= 0) throw InvalidArgument("rect_abs T0 must be positive");
  const ScaledReal period = t0 * ScaledReal::make(1, 2);
  const double freq = (ScaledReal::pi(2) / t0).to_double();
  std::vector<ForcingSegment> segs{
      {0.0, period.to_double(), {ForcingTerm({1.0}, Trig{TrigKind::Sin, freq, 0.0})}},
  };
  return PeriodicForcing(period, std::move(segs), "rect_abs");
}

PeriodicForcing make_rect_half(const ScaledReal& t0) {
  if (t0.sign() <= 0) throw InvalidArgument("rect_half T0 must be positive");
  const double freq = (ScaledReal::pi(2) / t0).to_double();
  const double half = at_fraction(t0, 1, 2);
  std::vector<ForcingSegment> segs{
      {0.0, half, {ForcingTerm({1.0}, Trig{TrigKind::Sin, freq, 0.0})}},
      {half, t0.to_double(), {}},
  };
  return PeriodicForcing(t0, std::move(segs), "rect_half");
}

double derive_cancellation_level(double level_a) {
  if (!(level_a > 0.0)) throw InvalidArgument("cancellation level A must be positive");
  // Antiderivative of cos(2 pi x) is sin(2 pi x) / (2 pi).
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto cos_integral = [&](double a, double b) { return (std::sin(two_pi * b) - std::sin(two_pi * a)) / two_pi; };
  return -level_a * cos_integral(3.0 / 8.0, 7.0 / 8.0) / cos_integral(1.0 / 16.0, 3.0 / 16.0);
}

PeriodicForcing make_cancellation_step(double level_a, const ScaledReal& period) {
  if (period.sign() <= 0) throw InvalidArgument("cancellation step period must be positive");
  const double level_b = derive_cancellation_level(level_a);
  const double p1 = at_fraction(period, 1, 16);
  const double p3 = at_fraction(period, 3, 16);
  const double p6 = at_fraction(period, 3, 8);
  const double p14 = at_fraction(period, 7, 8);
  std::vector<ForcingSegment> segs{
      {0.0, p1, {}},
      {p1, p3, {ForcingTerm::constant(level_b)}},
      {p3, p6, {}},
      {p6, p14, {ForcingTerm::constant(level_a)}},
      {p14, period.to_double(), {}},
  };
  return PeriodicForcing(period, std::move(segs), "cancellation_step");
}

std::optional<BuiltinKind> builtin_from_name(std::string_view name) {
  if (name == "sinusoid") return BuiltinKind::Sinusoid;
  if (name == "triangle") return BuiltinKind::Triangle;
  if (name == "step_symmetric") return BuiltinKind::StepSymmetric;
  if (name == "rect_abs") return BuiltinKind::RectAbs;
  if (name == "rect_half") return BuiltinKind::RectHalf;
  if (name == "cancellation_step") return BuiltinKind::CancellationStep;
  return std::nullopt;
}

std::string_view builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::Sinusoid: return "sinusoid";
    case BuiltinKind::Triangle: return "triangle";
    case BuiltinKind::StepSymmetric: return "step_symmetric";
    case BuiltinKind::RectAbs: return "rect_abs";
    case BuiltinKind::RectHalf: return "rect_half";
    case BuiltinKind::CancellationStep: return "cancellation_step";
  }
  return "unknown";
}

PeriodicForcing make_builtin(BuiltinKind kind, const BuiltinParams& p) {
  auto need = [](const std::optional<ScaledReal>& v, const char* what) -> const ScaledReal& {
    if (!v) throw InvalidArgument(std::string("builtin needs parameter '") + what + "'");
    return *v;
  };
  switch (kind) {
    case BuiltinKind::Sinusoid: return make_sinusoid(p.amplitude, need(p.omega, "omega"), p.kind, p.phase);
    case BuiltinKind::Triangle: return make_triangle(need(p.period, "period"));
    case BuiltinKind::StepSymmetric: return make_step_symmetric(need(p.period, "period"));
    case BuiltinKind::RectAbs: return make_rect_abs(need(p.t0, "T0"));
    case BuiltinKind::RectHalf: return make_rect_half(need(p.t0, "T0"));
    case BuiltinKind::CancellationStep:
      return make_cancellation_step(p.level_a, p.period.value_or(ScaledReal::integer(1)));
  }
  throw InvalidArgument("unknown builtin");
}

double sup_norm(const PeriodicForcing& f) {
  double best = 0.0;
  for (const auto& seg : f.segments()) best = std::max(best, segment_sup(seg));
  return best;
}

bool verify_minimal_period(const PeriodicForcing& f, int max_divisor) {
  if (max_divisor < 2) throw InvalidArgument("verify_minimal_period: max_divisor must be >= 2");
  const double sup = sup_norm(f);
  const double t = f.period_value();
  constexpr int kGrid = 4096;
  for (int k = 2; k <= max_divisor; ++k) {
    const double shift = t / k;
    double worst = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double s = t * (i + 0.5) / kGrid;
      worst = std::max(worst, std::fabs(f.evaluate(s) - f.evaluate(s + shift)));
    }
    if (worst <= 1e-9 * sup) return false;
  }
  return true;
}

}  // namespace resonalyze
