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

#include "resonalyze/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "resonalyze/errors.hpp"

namespace resonalyze {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSeriesRadius = 4.0;

// Coefficients of p(c + u) as a polynomial in u (repeated synthetic division).
std::vector<double> taylor_shift(std::span<const double> poly, double c) {
  std::vector<double> q(poly.begin(), poly.end());
  const int degree = static_cast<int>(q.size()) - 1;
  for (int i = 0; i < degree; ++i) {
    for (int k = degree - 1; k >= i; --k) q[k] += c * q[k + 1];
  }
  return q;
}

double wrap_turn(double frac) {
  frac -= std::floor(frac);
  if (frac >= 0.5) frac -= 1.0;
  return kTwoPi * frac;
}

}  // namespace

cplx poly_exp_integral(std::span<const double> poly, cplx z, double a, double b) {
  if (poly.empty() || b == a) return {0.0, 0.0};
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const std::vector<double> q = taylor_shift(poly, c);
  const int degree = static_cast<int>(q.size()) - 1;

  // F_k = e^{zc} * int_{-h}^{h} u^k e^{zu} du
  std::vector<cplx> moments(q.size());
  const double zh = std::abs(z) * h;
  if (zh <= kSeriesRadius) {
    const cplx w = z * h;
    const cplx scale = std::exp(z * c);
    for (int k = 0; k <= degree; ++k) {
      cplx sum = 0.0;
      cplx wj = 1.0;  // w^j / j!
      const double hk1 = std::pow(h, k + 1);
      for (int j = 0; j < 48; ++j) {
        if ((k + j) % 2 == 0) sum += wj * (2.0 * hk1 / (k + j + 1));
        wj *= w / static_cast<double>(j + 1);
      }
      moments[k] = scale * sum;
    }
  } else {
    const cplx eb = std::exp(z * b);
    const cplx ea = std::exp(z * a);
    moments[0] = (eb - ea) / z;
    double hk = 1.0;
    for (int k = 1; k <= degree; ++k) {
      hk *= h;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      moments[k] = (hk * eb - sign * hk * ea) / z - (static_cast<double>(k) / z) * moments[k - 1];
    }
  }
  cplx total = 0.0;
  for (int k = degree; k >= 0; --k) total += q[k] * moments[k];
  return total;
}

double poly_cos_integral(std::span<const double> poly, double mu, double psi, double a, double b) {
  return (std::polar(1.0, psi) * poly_exp_integral(poly, cplx(0.0, mu), a, b)).real();
}

namespace {

// Unit w with trig(x) = Re(w e^{ix}) for the given kind and phase.
cplx trig_unit(TrigKind kind, double phase) {
  const cplx base = kind == TrigKind::Cos ? cplx(1.0, 0.0) : cplx(0.0, -1.0);
  return phase == 0.0 ? base : base * std::polar(1.0, phase);
}

}  // namespace

double term_integral(const ForcingTerm& term, double omega0, TrigKind kind, double a, double b) {
  const cplx wk = trig_unit(kind, 0.0);
  if (!term.trig()) return (wk * poly_exp_integral(term.poly(), cplx(0.0, omega0), a, b)).real();
  const Trig& tr = *term.trig();
  const cplx wt = trig_unit(tr.kind, tr.phase);
  // Re(A)Re(B) = (AB + A conj(B)) / 2 with A = wt e^{i nu t}, B = wk e^{i omega0 t}.
  const cplx sum = wt * wk * poly_exp_integral(term.poly(), cplx(0.0, tr.freq + omega0), a, b);
  const cplx diff = wt * std::conj(wk) * poly_exp_integral(term.poly(), cplx(0.0, tr.freq - omega0), a, b);
  return 0.5 * (sum + diff).real();
}

double segment_integral(const ForcingSegment& seg, double omega0, TrigKind kind, double a, double b) {
  const double slack = 1e-12 * std::max(1.0, std::fabs(seg.end));
  if (a < seg.start - slack || b > seg.end + slack || a > b + slack) {
    throw InvalidArgument("segment_integral: [a, b] must lie inside the segment");
  }
  double total = 0.0;
  for (const auto& term : seg.terms) total += term_integral(term, omega0, kind, a, b);
  return total;
}

cplx term_exp_integral(const ForcingTerm& term, cplx z, double a, double b) {
  if (!term.trig()) return poly_exp_integral(term.poly(), z, a, b);
  const Trig& tr = *term.trig();
  const cplx wt = trig_unit(tr.kind, tr.phase);
  const cplx up = poly_exp_integral(term.poly(), z + cplx(0.0, tr.freq), a, b);
  const cplx down = poly_exp_integral(term.poly(), z - cplx(0.0, tr.freq), a, b);
  return 0.5 * (wt * up + std::conj(wt) * down);
}

PhaseAdvance::PhaseAdvance(const ScaledReal& alpha) : alpha_(alpha.to_double_double()) {
  if (alpha.pi_exponent() == 0) {
    const BigInt num = alpha.numerator();
    const BigInt den = alpha.denominator();
    const BigInt limit = BigInt(1) << 40;
    if (abs(num) < limit && den < limit) {
      rational_ = true;
      num_ = num.convert_to<std::int64_t>();
      den_ = den.convert_to<std::int64_t>();
      integer_ = den_ == 1;
    }
  }
}

PhaseAdvance::PhaseAdvance(double alpha) : alpha_{alpha, 0.0} {
  // A float ratio within a few ulps of an integer is one that rounding moved off it;
  // the Dirichlet quotient is ill-conditioned there, so snap.
  const double nearest = std::round(alpha);
  if (std::fabs(alpha - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(alpha))) {
    alpha_ = {nearest, 0.0};
    integer_ = true;
  }
}

double PhaseAdvance::turn_angle(std::int64_t k, int halves) const {
  if (rational_) {
    const __int128 den = static_cast<__int128>(den_) << halves;
    __int128 j = (static_cast<__int128>(k) * num_) % den;
    if (j < 0) j += den;
    return wrap_turn(static_cast<double>(j) / static_cast<double>(den));
  }
  const double scale = halves == 0 ? 1.0 : 0.5;
  const double kd = static_cast<double>(k);
  const double hi = kd * alpha_.hi * scale;
  const double err = std::fma(kd, alpha_.hi * scale, -hi);
  double frac = hi - std::floor(hi);
  frac += err + kd * alpha_.lo * scale;
  return wrap_turn(frac);
}

double PhaseAdvance::angle(std::int64_t k) const { return turn_angle(k, 0); }

std::pair<double, double> PhaseAdvance::partial_sums(std::int64_t n) const {
  if (n <= 0) return {0.0, 0.0};
  if (integer_) return {static_cast<double>(n), 0.0};
  // A full residue cycle of a rational rotation sums to zero.
  if (rational_) n %= den_;
  if (n == 0) return {0.0, 0.0};
  const double half_w = turn_angle(1, 1);
  const double lead = turn_angle(n - 1, 1);
  const double amp = std::sin(turn_angle(n, 1)) / std::sin(half_w);
  return {std::cos(lead) * amp, std::sin(lead) * amp};
}

PrefixTable::PrefixTable(PeriodicForcing f, double omega0) : forcing_(std::move(f)), omega0_(omega0) {
  if (!(omega0 > 0.0)) throw InvalidArgument("prefix table: omega0 must be positive");
  double ic = 0.0;
  double is = 0.0;
  breakpoints_.push_back({0.0, 0.0, 0.0});
  for (const auto& seg : forcing_.segments()) {
    ic += segment_integral(seg, omega0_, TrigKind::Cos, seg.start, seg.end);
    is += segment_integral(seg, omega0_, TrigKind::Sin, seg.start, seg.end);
    breakpoints_.push_back({seg.end, ic, is});
  }
  pc_ = ic;
  ps_ = is;
}

std::pair<double, double> PrefixTable::cumulative(double r) const {
  if (r <= 0.0) return {0.0, 0.0};
  if (r >= forcing_.period_value()) return {pc_, ps_};
  const std::size_t idx = forcing_.segment_index(r);
  const auto& seg = forcing_.segments()[idx];
  const auto& base = breakpoints_[idx];
  return {base.ic + segment_integral(seg, omega0_, TrigKind::Cos, seg.start, r),
          base.is + segment_integral(seg, omega0_, TrigKind::Sin, seg.start, r)};
}

PrefixTable build_prefix(const PeriodicForcing& f, double omega0) { return PrefixTable(f, omega0); }

namespace {

Projection rotate_periods(const PrefixTable& table, const PhaseAdvance& phase, std::int64_t periods, double t3) {
  const auto [c, s] = phase.partial_sums(periods);
  const double pc = table.per_period_cos();
  const double ps = table.per_period_sin();
  return {c * ps + s * pc, c * pc - s * ps, t3};
}

}  // namespace

Projection project(const PeriodicForcing& f, double omega0, double t3) {
  const double t2 = f.period_value();
  const double ratio = t3 / t2;
  const double periods = std::round(ratio);
  if (!(periods >= 1.0) || std::fabs(periods * t2 - t3) > 1e-9 * t3) {
    throw InvalidArgument("project: T3 must be a positive integer multiple of the forcing period");
  }
  const PrefixTable table(f, omega0);
  const PhaseAdvance phase(omega0 * t2 / kTwoPi);
  return rotate_periods(table, phase, static_cast<std::int64_t>(periods), t3);
}

Projection project(const PeriodicForcing& f, const ScaledReal& omega0, std::int64_t periods) {
  if (periods < 1) throw InvalidArgument("project: period count must be positive");
  if (omega0.sign() <= 0) throw InvalidArgument("project: omega0 must be positive");
  const PrefixTable table(f, omega0.to_double());
  const PhaseAdvance phase(omega0 * f.period() / ScaledReal::pi(2));
  return rotate_periods(table, phase, periods, f.period_value() * static_cast<double>(periods));
}

double adaptive_integral(const std::function<double(double)>& g, double a, double b, double tol,
                         AdaptiveOptions options) {
  if (!(a <= b)) throw InvalidArgument("adaptive_integral: need a <= b");
  if (!(tol > 0.0)) throw InvalidArgument("adaptive_integral: tolerance must be positive");
  if (a == b) return 0.0;

  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& other) const { return error < other.error; }
  };
  auto evaluate = [&](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(g, lo, hi, 0, 0.0, &err);
    // With max_depth 0 the reported error is measured on [-1, 1]; rescale to [lo, hi].
    return Piece{lo, hi, v, err * 0.5 * (hi - lo)};
  };

  std::priority_queue<Piece> pieces;
  pieces.push(evaluate(a, b));
  double total_error = pieces.top().error;
  int count = 1;
  auto estimate = [&] {
    auto copy = pieces;
    double sum = 0.0;
    while (!copy.empty()) {
      sum += copy.top().value;
      copy.pop();
    }
    return sum;
  };

  while (total_error > tol) {
    const Piece worst = pieces.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const double width_floor = 64.0 * std::numeric_limits<double>::epsilon() *
                               std::max({1.0, std::fabs(worst.a), std::fabs(worst.b)});
    if (count >= options.max_intervals || worst.b - worst.a < width_floor) {
      throw AccuracyFailure("adaptive_integral: tolerance not reached", estimate(), total_error);
    }
    pieces.pop();
    const Piece left = evaluate(worst.a, mid);
    const Piece right = evaluate(mid, worst.b);
    total_error += left.error + right.error - worst.error;
    pieces.push(left);
    pieces.push(right);
    ++count;
    if (count % 256 == 0) {
      // Refresh the running sum to shed accumulated rounding.
      auto copy = pieces;
      total_error = 0.0;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }
  return estimate();
}

}  // namespace resonalyze
