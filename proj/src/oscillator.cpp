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

#include "resonalyze/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "resonalyze/errors.hpp"

namespace resonalyze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

void validate(const OscillatorConfig& cfg) {
  if (cfg.omega0.sign() <= 0) throw InvalidArgument("oscillator: omega0 must be positive");
  if (!(cfg.damping >= 0.0) || !std::isfinite(cfg.damping)) {
    throw InvalidArgument("oscillator: damping must be finite and non-negative");
  }
  if (!std::isfinite(cfg.x0) || !std::isfinite(cfg.x1)) {
    throw InvalidArgument("oscillator: initial data must be finite");
  }
}

DuhamelSolver::DuhamelSolver(PeriodicForcing f, const OscillatorConfig& cfg)
    : cfg_((validate(cfg), cfg)),
      w_(cfg.omega0.to_double()),
      table_(std::move(f), w_),
      phase_(cfg.omega0 * table_.forcing().period() / ScaledReal::pi(2)) {}

std::pair<double, double> DuhamelSolver::integrals(double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("solve_at: t must be non-negative");
  const auto red = table_.forcing().reducer().reduce(t);
  const auto [ic_r, is_r] = table_.cumulative(red.remainder);
  const auto [cn, sn] = phase_.partial_sums(red.periods);
  const double theta = phase_.angle(red.periods);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double pc = table_.per_period_cos();
  const double ps = table_.per_period_sin();
  return {cn * pc - sn * ps + c * ic_r - s * is_r, cn * ps + sn * pc + c * is_r + s * ic_r};
}

State DuhamelSolver::assemble(double phi, double ic, double is) const {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  State out;
  out.x = cfg_.x0 * c + (cfg_.x1 / w_) * s + (s * ic - c * is) / w_;
  out.xdot = -cfg_.x0 * w_ * s + cfg_.x1 * c + c * ic + s * is;
  return out;
}

State DuhamelSolver::at(double t) const {
  const auto red = table_.forcing().reducer().reduce(t);
  const auto [ic, is] = integrals(t);
  return assemble(phase_.angle(red.periods) + w_ * red.remainder, ic, is);
}

State DuhamelSolver::at_direct(double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("solve_at: t must be non-negative");
  const PeriodicForcing& f = table_.forcing();
  const double t2 = f.period_value();
  const auto n = static_cast<std::int64_t>(std::floor(t / t2));
  const double r = std::max(0.0, t - static_cast<double>(n) * t2);

  std::vector<std::pair<double, double>> per_segment;
  for (const auto& seg : f.segments()) {
    per_segment.emplace_back(segment_integral(seg, w_, TrigKind::Cos, seg.start, seg.end),
                             segment_integral(seg, w_, TrigKind::Sin, seg.start, seg.end));
  }
  double ic = 0.0;
  double is = 0.0;
  for (std::int64_t k = 0; k < n; ++k) {
    const double shift = std::fmod(w_ * t2 * static_cast<double>(k), kTwoPi);
    const double c = std::cos(shift);
    const double s = std::sin(shift);
    for (const auto& [sc, ss] : per_segment) {
      ic += c * sc - s * ss;
      is += c * ss + s * sc;
    }
  }
  const double shift = std::fmod(w_ * t2 * static_cast<double>(n), kTwoPi);
  const auto [ic_r, is_r] = table_.cumulative(std::min(r, t2));
  ic += std::cos(shift) * ic_r - std::sin(shift) * is_r;
  is += std::cos(shift) * is_r + std::sin(shift) * ic_r;
  return assemble(std::fmod(w_ * t, kTwoPi), ic, is);
}

State solve_at(const PeriodicForcing& f, const OscillatorConfig& cfg, double t) {
  if (cfg.damping != 0.0) return damped_solve(f, cfg, t);
  return DuhamelSolver(f, cfg).at(t);
}

SteadyState damped_steady_state(double a0, double omega, double omega0, double d) {
  if (!(d > 0.0) || !(omega > 0.0) || !(omega0 > 0.0)) {
    throw InvalidArgument("damped_steady_state: d, omega and omega0 must be positive");
  }
  const double detune = omega0 * omega0 - omega * omega;
  const double friction = d * omega;
  const double denom = detune * detune + friction * friction;
  SteadyState out;
  out.c1 = a0 * detune / denom;
  out.c2 = a0 * friction / denom;
  out.x0_tilde = out.c1;
  out.x1_tilde = out.c2 * omega;
  const double peak_sq = omega0 * omega0 - 0.5 * d * d;
  if (peak_sq > 0.0) out.peak_omega = std::sqrt(peak_sq);
  return out;
}

DampedSolver::DampedSolver(const SinusoidShape& forcing, double omega0, double damping, double x0, double x1)
    : w0_(omega0), d_(damping), gamma_(0.5 * damping), amp_(forcing.amplitude), omega_(forcing.omega) {
  if (!(damping > 0.0)) throw InvalidArgument("damped solver: damping must be positive");
  if (!(omega0 > 0.0) || !(forcing.omega > 0.0)) throw InvalidArgument("damped solver: frequencies must be positive");
  psi_ = forcing.kind == TrigKind::Cos ? forcing.phase : forcing.phase - 0.5 * std::numbers::pi;
  const SteadyState ss = damped_steady_state(amp_, omega_, w0_, d_);
  c1_ = ss.c1;
  c2_ = ss.c2;
  if (gamma_ < w0_) {
    regime_ = DampingRegime::Underdamped;
    rate_ = std::sqrt((w0_ - gamma_) * (w0_ + gamma_));
  } else if (gamma_ == w0_) {
    regime_ = DampingRegime::Critical;
    rate_ = 0.0;
  } else {
    regime_ = DampingRegime::Overdamped;
    rate_ = std::sqrt((gamma_ - w0_) * (gamma_ + w0_));
  }
  const State p0 = particular(0.0);
  y0_ = x0 - p0.x;
  v0_ = x1 - p0.xdot;
}

State DampedSolver::particular(double t) const {
  const double arg = omega_ * t + psi_;
  const double c = std::cos(arg);
  const double s = std::sin(arg);
  return {c1_ * c + c2_ * s, omega_ * (c2_ * c - c1_ * s)};
}

State DampedSolver::transient(double t) const {
  const double b = v0_ + gamma_ * y0_;
  State out;
  switch (regime_) {
    case DampingRegime::Underdamped: {
      const double e = std::exp(-gamma_ * t);
      const double c = std::cos(rate_ * t);
      const double s = std::sin(rate_ * t);
      out.x = e * (y0_ * c + b * s / rate_);
      out.xdot = -gamma_ * out.x + e * (-y0_ * rate_ * s + b * c);
      break;
    }
    case DampingRegime::Critical: {
      const double e = std::exp(-gamma_ * t);
      out.x = e * (y0_ + b * t);
      out.xdot = -gamma_ * out.x + e * b;
      break;
    }
    case DampingRegime::Overdamped: {
      // e^{-gamma t} cosh(kappa t) and e^{-gamma t} sinh(kappa t) without overflow.
      const double ep = std::exp((rate_ - gamma_) * t);
      const double em = std::exp(-(rate_ + gamma_) * t);
      const double ch = 0.5 * (ep + em);
      const double sh = 0.5 * (ep - em);
      out.x = y0_ * ch + b * sh / rate_;
      out.xdot = -gamma_ * out.x + y0_ * rate_ * sh + b * ch;
      break;
    }
  }
  return out;
}

State DampedSolver::at(double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("damped solver: t must be non-negative");
  const State p = particular(t);
  const State h = transient(t);
  return {p.x + h.x, p.xdot + h.xdot};
}

double DampedSolver::decay_rate() const {
  return regime_ == DampingRegime::Overdamped ? gamma_ - rate_ : gamma_;
}

State damped_solve(const PeriodicForcing& f, const OscillatorConfig& cfg, double t) {
  validate(cfg);
  const auto shape = f.as_sinusoid();
  if (!shape) throw UnsupportedCombination("damped solve: forcing must be a single sinusoid");
  return DampedSolver(*shape, cfg.omega0.to_double(), cfg.damping, cfg.x0, cfg.x1).at(t);
}

BeatDescriptor beat_descriptor(double a0, double omega, double omega0) {
  if (!(omega > 0.0) || !(omega0 > 0.0)) throw InvalidArgument("beat: frequencies must be positive");
  if (omega == omega0) throw ResonantCase("beat: forcing frequency equals natural frequency");
  return {2.0 * std::fabs(a0) / std::fabs(omega0 * omega0 - omega * omega), 0.5 * std::fabs(omega0 - omega),
          0.5 * (omega0 + omega)};
}

std::string_view method_name(Method m) {
  return m == Method::ExactDuhamel ? "exact-duhamel" : "damped-closed-form";
}

namespace {

template <typename Eval>
Trajectory fill(const PeriodicForcing& f, const OscillatorConfig& cfg, int count, Eval&& time_of) {
  validate(cfg);
  Trajectory traj;
  traj.config = cfg;
  traj.forcing_name = f.name();
  traj.samples.reserve(count);
  if (cfg.damping > 0.0) {
    const auto shape = f.as_sinusoid();
    if (!shape) throw UnsupportedCombination("sample: damping requires a single sinusoid forcing");
    const DampedSolver solver(*shape, cfg.omega0.to_double(), cfg.damping, cfg.x0, cfg.x1);
    traj.method = Method::DampedClosedForm;
    for (int i = 0; i < count; ++i) {
      const double t = time_of(i);
      const State s = solver.at(t);
      traj.samples.push_back({t, s.x, s.xdot, f.evaluate(t)});
    }
  } else {
    const DuhamelSolver solver(f, cfg);
    traj.method = Method::ExactDuhamel;
    for (int i = 0; i < count; ++i) {
      const double t = time_of(i);
      const State s = solver.at(t);
      traj.samples.push_back({t, s.x, s.xdot, f.evaluate(t)});
    }
  }
  return traj;
}

}  // namespace

Trajectory sample(const PeriodicForcing& f, const OscillatorConfig& cfg, double t0, double t1, int count) {
  if (!(t0 >= 0.0) || !(t1 > t0) || !std::isfinite(t1)) throw InvalidArgument("sample: need 0 <= t0 < t1");
  if (count < 2) throw InvalidArgument("sample: count must be at least 2");
  const double span = t1 - t0;
  return fill(f, cfg, count, [&](int i) {
    if (i == count - 1) return t1;
    return t0 + span * static_cast<double>(i) / static_cast<double>(count - 1);
  });
}

Trajectory sample_multiples(const PeriodicForcing& f, const OscillatorConfig& cfg, double step, int count) {
  if (!(step > 0.0)) throw InvalidArgument("sample_multiples: step must be positive");
  if (count < 1) throw InvalidArgument("sample_multiples: count must be positive");
  return fill(f, cfg, count, [&](int i) { return step * static_cast<double>(i); });
}

double energy_residual(const Trajectory& traj, const PeriodicForcing& f) {
  if (traj.config.damping != 0.0) throw UnsupportedCombination("energy_residual: undamped trajectories only");
  if (traj.samples.empty()) return 0.0;
  (void)f;
  const double w = traj.config.omega0.to_double();
  auto energy = [w](const Sample& s) { return w * w * s.x * s.x + s.xdot * s.xdot; };
  const double e0 = energy(traj.samples.front());
  double work = 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const Sample& a = traj.samples[i - 1];
    const Sample& b = traj.samples[i];
    work += (b.t - a.t) * (a.f * a.xdot + b.f * b.xdot);  // 2 * trapezoid
    worst = std::max(worst, std::fabs(energy(b) - e0 - work));
  }
  return worst;
}

namespace {

// Uniform-grid view of a trajectory with Hermite interpolation between samples.
class GridView {
 public:
  explicit GridView(const Trajectory& traj) : s_(traj.samples) {
    if (s_.size() < 4) throw InsufficientData("detect_period: need at least 4 samples");
    t0_ = s_.front().t;
    h_ = (s_.back().t - t0_) / static_cast<double>(s_.size() - 1);
    for (std::size_t i = 1; i < s_.size(); ++i) {
      if (std::fabs((s_[i].t - s_[i - 1].t) - h_) > 1e-6 * h_) {
        throw InvalidArgument("detect_period: trajectory grid must be uniform");
      }
    }
    for (const auto& s : s_) sup_ = std::max(sup_, std::fabs(s.x));
  }

  double span() const { return s_.back().t - t0_; }
  double step() const { return h_; }
  double sup() const { return sup_; }
  std::span<const Sample> samples() const { return s_; }

  double value(double t) const {
    const double u = (t - t0_) / h_;
    auto i = static_cast<std::size_t>(std::clamp(std::floor(u), 0.0, static_cast<double>(s_.size() - 2)));
    const Sample& a = s_[i];
    const Sample& b = s_[i + 1];
    const double tau = std::clamp((t - a.t) / h_, 0.0, 1.0);
    const double t2 = tau * tau;
    const double t3 = t2 * tau;
    return (2 * t3 - 3 * t2 + 1) * a.x + (t3 - 2 * t2 + tau) * h_ * a.xdot + (-2 * t3 + 3 * t2) * b.x +
           (t3 - t2) * h_ * b.xdot;
  }

  // max |x(t + T) - x(t)| over samples with t + T inside the grid; stops early past `cap`.
  double mismatch(double period, double cap) const {
    const double shift = period / h_;
    const double lag = std::round(shift);
    const bool exact = std::fabs(shift - lag) <= 1e-9 * std::max(1.0, shift);
    const double end = s_.back().t;
    double worst = 0.0;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      double other;
      if (exact) {
        const std::size_t j = i + static_cast<std::size_t>(lag);
        if (j >= s_.size()) break;
        other = s_[j].x;
      } else {
        const double t = s_[i].t + period;
        if (t > end) break;
        other = value(t);
      }
      worst = std::max(worst, std::fabs(other - s_[i].x));
      if (worst > cap) break;
    }
    return worst;
  }

 private:
  std::span<const Sample> s_;
  double t0_ = 0.0;
  double h_ = 0.0;
  double sup_ = 0.0;
};

}  // namespace

std::optional<double> detect_period(const Trajectory& traj, std::optional<double> candidate, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("detect_period: tolerance must be positive");
  const GridView grid(traj);
  const double threshold = tol * (1.0 + grid.sup());

  if (candidate) {
    if (!(*candidate > 0.0)) throw InvalidArgument("detect_period: candidate must be positive");
    if (grid.span() < 3.0 * *candidate * (1.0 - 1e-12)) {
      throw InsufficientData("detect_period: trajectory must span three candidate periods");
    }
    for (int k = 64; k >= 1; --k) {
      const double period = *candidate / k;
      if (grid.mismatch(period, threshold) <= threshold) return period;
    }
    return std::nullopt;
  }

  const auto s = grid.samples();
  const std::size_t n = s.size();
  double mean = 0.0;
  for (const auto& p : s) mean += p.x;
  mean /= static_cast<double>(n);
  const std::size_t max_lag = (n - 1) / 3;
  std::vector<double> acf(max_lag + 1, 0.0);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += (s[i].x - mean) * (s[i + lag].x - mean);
    acf[lag] = acc / static_cast<double>(n - lag);
  }
  if (!(acf[0] > 0.0)) return std::nullopt;

  std::size_t lag = 1;
  while (lag <= max_lag && acf[lag] >= 0.5 * acf[0]) ++lag;
  const double h = grid.step();
  for (; lag < max_lag; ++lag) {
    if (!(acf[lag] >= acf[lag - 1] && acf[lag] >= acf[lag + 1] && acf[lag] > 0.5 * acf[0])) continue;
    const double lo = (static_cast<double>(lag) - 1.0) * h;
    const double hi = (static_cast<double>(lag) + 1.0) * h;
    const double inf = std::numeric_limits<double>::infinity();
    const auto best = boost::math::tools::brent_find_minima(
        [&](double period) { return grid.mismatch(period, inf); }, lo, hi, 52);
    const double exact_lag = grid.mismatch(static_cast<double>(lag) * h, inf);
    if (exact_lag <= threshold) return static_cast<double>(lag) * h;
    if (best.second <= threshold) return best.first;
  }
  return std::nullopt;
}

double detect_growth(const Trajectory& traj, double t3) {
  if (!(t3 > 0.0)) throw InvalidArgument("detect_growth: T3 must be positive");
  const auto& s = traj.samples;
  if (s.size() < 10) throw InsufficientData("detect_growth: need at least 10 samples");
  std::vector<double> n(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    n[i] = std::round(s[i].t / t3);
    if (std::fabs(s[i].t - n[i] * t3) > 1e-9 * std::max(1.0, std::fabs(s[i].t))) {
      throw InvalidArgument("detect_growth: samples must sit at multiples of T3");
    }
    if (i > 0 && n[i] != n[i - 1] + 1.0) throw InvalidArgument("detect_growth: multiples must be consecutive");
  }
  double nbar = 0.0;
  double xbar = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    nbar += n[i];
    xbar += s[i].x;
  }
  nbar /= static_cast<double>(s.size());
  xbar /= static_cast<double>(s.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sxy += (n[i] - nbar) * (s[i].x - xbar);
    sxx += (n[i] - nbar) * (n[i] - nbar);
  }
  return sxy / sxx;
}

}  // namespace resonalyze
