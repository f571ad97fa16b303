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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resonalyze/classifier.hpp"
#include "resonalyze/commands.hpp"
#include "resonalyze/errors.hpp"
#include "resonalyze/laplace.hpp"
#include "resonalyze/modal.hpp"
#include "resonalyze/oscillator.hpp"
#include "resonalyze/scenario.hpp"

namespace py = pybind11;
using namespace resonalyze;

namespace {

ScaledReal as_scaled(const py::object& v) {
  if (py::isinstance<ScaledReal>(v)) return v.cast<ScaledReal>();
  if (py::isinstance<py::str>(v)) return ScaledReal::parse(v.cast<std::string>());
  if (py::isinstance<py::int_>(v)) return ScaledReal::integer(v.cast<std::int64_t>());
  throw InvalidArgument("expected a ScaledReal, an int or a string like \"1/2*pi\"");
}

py::dict classification_dict(const Classification& c) {
  return py::module_::import("json").attr("loads")(to_json(c).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact resonance classification for periodically forced oscillators.";

  auto base = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NoExactRepresentation>(m, "NoExactRepresentation", PyExc_ArithmeticError);
  py::register_exception<AccuracyFailure>(m, "AccuracyFailure", PyExc_ArithmeticError);
  py::register_exception<PoleProximity>(m, "PoleProximity", PyExc_ArithmeticError);
  py::register_exception<NotApplicable>(m, "NotApplicable", PyExc_RuntimeError);
  py::register_exception<InvalidState>(m, "InvalidState", PyExc_RuntimeError);

  py::class_<ScaledReal>(m, "ScaledReal")
      .def(py::init([](const std::string& text) { return ScaledReal::parse(text); }), py::arg("text"))
      .def_static("pi", [](std::int64_t num, std::int64_t den) { return ScaledReal::pi(num, den); }, py::arg("num") = 1,
                  py::arg("den") = 1)
      .def_property_readonly("pi_exponent", &ScaledReal::pi_exponent)
      .def("__float__", &ScaledReal::to_double)
      .def("__str__", &ScaledReal::to_string)
      .def("__repr__", [](const ScaledReal& v) { return "ScaledReal('" + v.to_string() + "')"; })
      .def("__eq__", [](const ScaledReal& a, const ScaledReal& b) { return a == b; })
      .def("__hash__", [](const ScaledReal& v) { return py::hash(py::str(v.to_string())); })
      .def("__mul__", [](const ScaledReal& a, const ScaledReal& b) { return a * b; })
      .def("__truediv__", [](const ScaledReal& a, const ScaledReal& b) { return a / b; });

  py::class_<PeriodicForcing>(m, "Forcing")
      .def_property_readonly("period", &PeriodicForcing::period)
      .def_property_readonly("name", &PeriodicForcing::name)
      .def("__call__", &PeriodicForcing::evaluate, py::arg("t"))
      .def("sup_norm", [](const PeriodicForcing& f) { return sup_norm(f); });

  m.def(
      "sinusoid",
      [](double amplitude, const py::object& omega, const std::string& kind, double phase) {
        if (kind != "sin" && kind != "cos") throw InvalidArgument("kind must be 'sin' or 'cos'");
        return make_sinusoid(amplitude, as_scaled(omega), kind == "sin" ? TrigKind::Sin : TrigKind::Cos, phase);
      },
      py::arg("amplitude"), py::arg("omega"), py::arg("kind") = "sin", py::arg("phase") = 0.0);
  m.def("triangle", [](const py::object& period) { return make_triangle(as_scaled(period)); }, py::arg("period"));
  m.def("step_symmetric", [](const py::object& period) { return make_step_symmetric(as_scaled(period)); },
        py::arg("period"));
  m.def("rect_abs", [](const py::object& t0) { return make_rect_abs(as_scaled(t0)); }, py::arg("t0"));
  m.def("rect_half", [](const py::object& t0) { return make_rect_half(as_scaled(t0)); }, py::arg("t0"));
  m.def("cancellation_step", [](double level_a) { return make_cancellation_step(level_a); }, py::arg("level_a") = 0.5);

  m.def(
      "classify",
      [](const PeriodicForcing& f, const py::object& omega0, double q_tol, bool strict_minimality) {
        ClassifierOptions opts;
        opts.q_tol = q_tol;
        opts.strict_minimality = strict_minimality;
        return classification_dict(classify(f, as_scaled(omega0), opts));
      },
      py::arg("forcing"), py::arg("omega0"), py::arg("q_tol") = 1e-9, py::arg("strict_minimality") = false,
      "Case split as a dict with the same keys as the classify command.");

  m.def(
      "project",
      [](const PeriodicForcing& f, const py::object& omega0, std::int64_t periods) {
        const Projection p = project(f, as_scaled(omega0), periods);
        return py::make_tuple(p.q1, p.q2);
      },
      py::arg("forcing"), py::arg("omega0"), py::arg("periods") = 1, "(Q1, Q2) over `periods` forcing periods.");

  m.def(
      "solve",
      [](const PeriodicForcing& f, const py::object& omega0, const std::vector<double>& times, double x0, double x1,
         double damping) {
        OscillatorConfig cfg;
        cfg.omega0 = as_scaled(omega0);
        cfg.x0 = x0;
        cfg.x1 = x1;
        cfg.damping = damping;
        std::vector<std::pair<double, double>> out;
        out.reserve(times.size());
        if (damping == 0.0) {
          const DuhamelSolver solver(f, cfg);
          for (double t : times) {
            const State s = solver.at(t);
            out.emplace_back(s.x, s.xdot);
          }
        } else {
          for (double t : times) {
            const State s = solve_at(f, cfg, t);
            out.emplace_back(s.x, s.xdot);
          }
        }
        return out;
      },
      py::arg("forcing"), py::arg("omega0"), py::arg("times"), py::arg("x0") = 0.0, py::arg("x1") = 0.0,
      py::arg("damping") = 0.0, "List of (x, xdot) at the given times.");

  m.def("laplace", [](const PeriodicForcing& f, std::complex<double> s) { return periodic_transform(f, s); },
        py::arg("forcing"), py::arg("s"));

  m.def(
      "run",
      [](const std::string& command, const std::string& scenario_path, const std::string& format) {
        const Scenario s = load_scenario(scenario_path);
        const Format fmt = parse_format(format.empty() ? s.outputs.format : format);
        if (command == "classify") return run_classify(s);
        if (command == "simulate") return run_simulate(s, fmt);
        if (command == "project") return run_project(s);
        if (command == "laplace") return run_laplace(s);
        if (command == "modal") return run_modal(s, format.empty() ? Format::Json : fmt);
        if (command == "sweep") return run_sweep(s);
        throw InvalidArgument("unknown command '" + command + "'");
      },
      py::arg("command"), py::arg("scenario"), py::arg("format") = "",
      "Run a subcommand on a scenario file and return its output text.");

  m.def("repro", [](const std::string& format) { return render_repro(repro_table(), parse_format(format)); },
        py::arg("format") = "csv");

  (void)base;
}
