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

#include "resonalyze/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "resonalyze/laplace.hpp"
#include "resonalyze/modal.hpp"
#include "resonalyze/oscillator.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze {

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidArgument("format must be csv or json");
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json snapping_json(const Scenario& s) {
  Json arr = Json::array();
  for (const auto& snap : s.snapped) {
    arr.push_back(Json{{"field", snap.field}, {"input", snap.input}, {"value", to_json(snap.value)},
                       {"residual", snap.residual}});
  }
  return arr;
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string run_classify(const Scenario& s) {
  const PeriodicForcing f = s.build_forcing();
  const Classification c = classify(f, s.require_omega0(), s.classifier);
  Json j = to_json(c);
  if (c.verdict == Verdict::Periodic) {
    // Smallest period of the zero-data response actually observed, over four T3 with 256 samples per T3,
    // so T3/k for k | 256 is an exact grid shift. It may be shorter than T3.
    constexpr double kTol = 1e-8;
    const double t3 = c.t3->to_double();
    OscillatorConfig cfg;
    cfg.omega0 = c.omega0_exact;
    const Trajectory traj = sample(f, cfg, 0.0, 4.0 * t3, 4 * 256 + 1);
    const std::optional<double> detected = detect_period(traj, t3, kTol);
    j["empiricalPeriod"] = Json{{"candidate", t3}, {"detected", detected ? Json(*detected) : Json(nullptr)}, {"tolerance", kTol}};
  }
  if (!s.name.empty()) j["scenario"] = s.name;
  if (!s.snapped.empty()) j["inputSnapping"] = snapping_json(s);
  return dump(j);
}

std::string run_simulate(const Scenario& s, Format format) {
  const PeriodicForcing f = s.build_forcing();
  const double t1 = s.time.t1.value_or(20.0 * f.period_value());
  if (!(t1 > s.time.t0)) throw ScenarioError("time.t1", "must exceed t0");
  const Trajectory traj = sample(f, s.config(), s.time.t0, t1, s.time.samples);
  if (format == Format::Json) return dump(to_json(traj));
  std::ostringstream out;
  write_csv(traj, out);
  return out.str();
}

std::string run_project(const Scenario& s) {
  const PeriodicForcing f = s.build_forcing();
  const ScaledReal& omega0 = s.require_omega0();
  std::int64_t periods = 1;
  if (s.project_periods) {
    periods = *s.project_periods;
  } else {
    const RatioClass alpha = ratio_kind(f.period(), ScaledReal::pi(2) / omega0);
    if (alpha.is_rational()) periods = alpha.rational->n.convert_to<std::int64_t>();
  }
  Json j = to_json(project(f, omega0, periods));
  j["periods"] = periods;
  return dump(j);
}

std::string run_laplace(const Scenario& s) {
  const PeriodicForcing f = s.build_forcing();
  const double omega0 = s.require_omega0().to_double();
  const LaplaceGrid def = s.laplace.value_or(LaplaceGrid{});
  std::ostringstream out;
  out << "re_s,im_s,re_F,im_F,re_X,im_X\n";
  const std::string nan = format_double(std::numeric_limits<double>::quiet_NaN());
  for (double re : def.re.values()) {
    for (double im : def.im.values()) {
      const Complex point(re, im);
      out << format_double(re) << ',' << format_double(im) << ',';
      try {
        const Complex big_f = periodic_transform(f, point);
        out << format_double(big_f.real()) << ',' << format_double(big_f.imag()) << ',';
      } catch (const PoleProximity&) {
        out << nan << ',' << nan << ',';
      }
      try {
        const Complex x = solution_transform(f, omega0, point);
        out << format_double(x.real()) << ',' << format_double(x.imag()) << '\n';
      } catch (const PoleProximity&) {
        out << nan << ',' << nan << '\n';
      }
    }
  }
  return out.str();
}

std::string run_modal(const Scenario& s, Format format) {
  if (!s.wave) throw ScenarioError("wave", "required for the modal command");
  const WaveProblem problem = s.wave->build();
  if (format == Format::Json) {
    Json modes = Json::array();
    for (const auto& report : classify_modes(problem, s.classifier)) {
      Json m;
      m["j"] = report.mode;
      m["omega"] = report.omega;
      m["omegaExact"] = to_json(mode_frequency(problem, report.mode));
      m["classification"] = to_json(report.classification);
      modes.push_back(std::move(m));
    }
    Json j;
    if (!s.name.empty()) j["scenario"] = s.name;
    j["length"] = to_json(problem.length);
    j["speed"] = to_json(problem.speed);
    j["modes"] = std::move(modes);
    return dump(j);
  }
  if (!s.wave->grid_x || !s.wave->grid_t) throw ScenarioError("wave.grid", "required for CSV output");
  const auto oscillators = modal_reduce(problem);
  std::vector<DuhamelSolver> solvers;
  for (const auto& osc : oscillators) {
    OscillatorConfig cfg;
    cfg.omega0 = osc.omega;
    solvers.emplace_back(osc.forcing, cfg);
  }
  const double len = problem.length.to_double();
  std::ostringstream out;
  out << "x,t,w\n";
  for (double x : s.wave->grid_x->values()) {
    if (!(x >= 0.0 && x <= len)) throw ScenarioError("wave.grid.x", "points must lie in [0, L]");
    for (double t : s.wave->grid_t->values()) {
      if (!(t >= 0.0)) throw ScenarioError("wave.grid.t", "times must be non-negative");
      double w = 0.0;
      for (std::size_t k = 0; k < oscillators.size(); ++k) {
        w += mode_shape(problem, oscillators[k].mode, x) * solvers[k].at(t).x;
      }
      out << format_double(x) << ',' << format_double(t) << ',' << format_double(w) << '\n';
    }
  }
  return out.str();
}

unsigned sweep_threads(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* env = std::getenv("RESONALYZE_THREADS"); env && *env) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1) throw InvalidArgument("RESONALYZE_THREADS must be a positive integer");
    n = std::min<unsigned>(n, static_cast<unsigned>(std::min<long>(cap, 1024)));
  }
  return std::max(1u, n);
}

std::string run_sweep(const Scenario& s, unsigned threads) {
  if (!s.sweep) throw ScenarioError("sweep", "required for the sweep command");
  const SweepPlan& def = *s.sweep;
  const bool over_forcing = def.param == "omega";
  if (!s.forcing) throw ScenarioError("forcing", "required for the sweep command");
  if (over_forcing && s.forcing->builtin != BuiltinKind::Sinusoid) {
    throw ScenarioError("sweep.param", "omega sweeps need a sinusoid builtin forcing");
  }
  std::optional<PeriodicForcing> base;
  if (!over_forcing) base = s.build_forcing();
  const ScaledReal* omega0 = over_forcing ? &s.require_omega0() : nullptr;

  const std::size_t count = def.values.size();
  std::vector<std::string> rows(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t i) {
    try {
      const ScaledReal& v = def.values[i];
      Classification c;
      if (over_forcing) {
        ForcingDef f = *s.forcing;
        f.params.omega = v;
        c = classify(f.build(), *omega0, s.classifier);
      } else {
        c = classify(*base, v, s.classifier);
      }
      std::ostringstream row;
      row << format_double(v.to_double()) << ',' << v.to_string() << ',' << c.case_id << ','
          << verdict_name(c.verdict) << ',' << optional_cell(c.q1) << ',' << optional_cell(c.q2) << ','
          << optional_cell(c.sup_bound) << ',' << optional_cell(c.growth_per_cycle) << '\n';
      rows[i] = row.str();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const unsigned workers = std::min<std::size_t>(sweep_threads(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::string out = def.param + ",paramExact,caseId,verdict,Q1,Q2,supBound,growthPerCycle\n";
  for (const auto& r : rows) out += r;
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

ReproRow value_row(std::string item, double computed, double expected, double tol) {
  return {std::move(item), format_double(computed), format_double(expected) + " +- " + format_double(tol),
          std::fabs(computed - expected) <= tol};
}

ReproRow verdict_row(std::string item, const PeriodicForcing& f, const ScaledReal& omega0, Verdict expected) {
  const Classification c = classify(f, omega0);
  return {std::move(item), std::string(verdict_name(c.verdict)) + " (case " + std::to_string(c.case_id) + ")",
          std::string(verdict_name(expected)), c.verdict == expected};
}

}  // namespace

std::vector<ReproRow> repro_table() {
  auto sr = [](const char* text) { return ScaledReal::parse(text); };
  const PeriodicForcing tri4 = make_triangle(sr("4"));
  const PeriodicForcing tri2pi = make_triangle(sr("2pi"));
  const PeriodicForcing tri6 = make_triangle(sr("6"));
  const PeriodicForcing fs = make_step_symmetric(sr("2"));
  const PeriodicForcing fa = make_rect_half(sr("4"));
  const PeriodicForcing fm = make_cancellation_step(0.5);
  const PeriodicForcing fi = make_sinusoid(1.0, sr("pi"));
  const PeriodicForcing fj = make_rect_abs(sr("1"));

  std::vector<ReproRow> rows;
  rows.push_back(value_row("triangle T2=4 omega0=pi/2 Q1 = 16/pi^2", project(tri4, sr("pi/2"), 1).q1,
                           16.0 / (kPi * kPi), 1e-10));
  const double q6 = project(tri6, sr("pi"), 1).q1;
  rows.push_back(value_row("triangle T2=6 omega0=pi Q1 = -8/(3 pi^2)", q6, -8.0 / (3.0 * kPi * kPi), 1e-10));
  rows.push_back(value_row("triangle T2=6 omega0=pi Q1 printed", q6, -0.27019, 5e-5));
  rows.push_back(value_row("sin(pi t/3) against sin(pi t) over [0,6]",
                           project(make_sinusoid(1.0, sr("pi/3")), sr("pi"), 1).q1, 0.0, 1e-10));

  rows.push_back(verdict_row("verdict triangle T2=T1=4", tri4, sr("pi/2"), Verdict::Resonant));
  rows.push_back(verdict_row("verdict triangle T2=2pi T1=4pi", tri2pi, sr("1/2"), Verdict::Periodic));
  rows.push_back(verdict_row("verdict triangle T2=6 T1=2", tri6, sr("pi"), Verdict::Resonant));
  rows.push_back(verdict_row("verdict f_s T2=2 omega0=pi", fs, sr("pi"), Verdict::Resonant));
  rows.push_back(verdict_row("verdict f_a T2=4 omega0=pi", fa, sr("pi"), Verdict::Resonant));
  rows.push_back(verdict_row("verdict f_m T2=1 omega0=2pi", fm, sr("2pi"), Verdict::Periodic));
  rows.push_back(verdict_row("verdict f_i sin(pi t) omega0=1", fi, sr("1"), Verdict::BoundedNonPeriodic));
  rows.push_back(verdict_row("verdict f_j T2=1/2 omega0=1", fj, sr("1"), Verdict::BoundedNonPeriodic));

  const Classification c2 = classify(tri2pi, sr("1/2"));
  rows.push_back({"triangle T2=2pi omega0=1/2 T3", c2.t3 ? c2.t3->to_string() : "none", "4*pi",
                  c2.t3 && *c2.t3 == sr("4pi")});

  const double level_b = derive_cancellation_level(0.5);
  rows.push_back(value_row("f_m level B for A=1/2", level_b,
                           std::sqrt(2.0) / (2.0 * (std::sin(3.0 * kPi / 8.0) - std::sin(kPi / 8.0))), 1e-12));
  const Projection pm = project(fm, sr("2pi"), 1);
  rows.push_back(value_row("f_m against cos(2 pi t)", pm.q2, 0.0, 1e-12));
  rows.push_back(value_row("f_m against sin(2 pi t)", pm.q1, 0.0, 1e-12));
  const Projection pa = project(fa, sr("pi"), 1);
  rows.push_back(value_row("f_a Q1", pa.q1, 0.0, 1e-12));
  rows.push_back(value_row("f_a Q2 = -4/(3 pi)", pa.q2, -4.0 / (3.0 * kPi), 1e-12));
  rows.push_back(value_row("f_s P_c = 2/pi", build_prefix(fs, kPi).per_period_cos(), 2.0 / kPi, 1e-12));

  const Classification c4 = classify(tri4, sr("pi/2"));
  const double t1 = resonance_witness(tri4, c4, 10.0);
  rows.push_back(value_row("witness t1(10) triangle T2=4", t1, 44.0, 0.0));
  OscillatorConfig cfg4;
  cfg4.omega0 = sr("pi/2");
  const double x44 = DuhamelSolver(tri4, cfg4).at(t1).x;
  rows.push_back({"|x(t1(10))| > 10", format_double(std::fabs(x44)), "> 10", std::fabs(x44) > 10.0});

  rows.push_back(value_row("f_i bound (2T2/omega0)(2/|sin 1|+1)", *classify(fi, sr("1")).sup_bound,
                           4.0 * (2.0 / std::sin(1.0) + 1.0), 1e-12));

  const BeatDescriptor beat = beat_descriptor(1.0, 11.0, 10.0);
  rows.push_back(value_row("beat modulation frequency", beat.modulation_freq, 0.5, 0.0));
  rows.push_back(value_row("beat carrier frequency", beat.carrier_freq, 10.5, 0.0));

  OscillatorConfig cfgm;
  cfgm.omega0 = sr("2pi");
  const DuhamelSolver sm(fm, cfgm);
  double worst = 0.0;
  double sup = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 5.0 * i / 1000.0;
    const double x = sm.at(t).x;
    sup = std::max(sup, std::fabs(x));
    worst = std::max(worst, std::fabs(sm.at(t + 1.0).x - x));
  }
  rows.push_back({"f_m periodic with T3=1", format_double(worst), "<= 1e-8 (1 + sup|x|)", worst <= 1e-8 * (1.0 + sup)});
  return rows;
}

std::string render_repro(const std::vector<ReproRow>& rows, Format format) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"item", r.item}, {"computed", r.computed}, {"expected", r.expected}, {"pass", r.pass}});
    }
    return dump(arr);
  }
  std::string out = "item,computed,expected,status\n";
  for (const auto& r : rows) {
    out += r.item + ',' + r.computed + ',' + r.expected + ',' + (r.pass ? "pass" : "FAIL") + '\n';
  }
  return out;
}

}  // namespace resonalyze
