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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "resonalyze/commands.hpp"
#include "resonalyze/errors.hpp"
#include "resonalyze/scenario.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kNumericFailure = 3;

struct Options {
  std::string scenario;
  std::string out;
  std::string format;
  std::optional<double> qtol;
  bool strict_minimality = false;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_scenario) {
  auto* s = cmd->add_option("--scenario", opt.scenario, "Scenario file (JSON)");
  if (needs_scenario) s->required();
  cmd->add_option("--out", opt.out, "Output path (default: scenario outputs.path, else stdout)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--qtol", opt.qtol, "Zero tolerance for the resonance inner products")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict-minimality", opt.strict_minimality, "Verify the forcing period is minimal first");
}

resonalyze::Scenario load(const Options& opt) {
  resonalyze::Scenario s = resonalyze::load_scenario(opt.scenario);
  if (opt.qtol) s.classifier.q_tol = *opt.qtol;
  if (opt.strict_minimality) s.classifier.strict_minimality = true;
  if (!opt.format.empty()) s.outputs.format = opt.format;
  if (!opt.out.empty()) s.outputs.path = opt.out;
  return s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw resonalyze::ScenarioError("outputs.path", "cannot write " + path);
  out << text;
  if (!out) throw resonalyze::ScenarioError("outputs.path", "write failed for " + path);
}

int run(const std::string& command, const Options& opt) {
  using namespace resonalyze;
  if (command == "repro") {
    const auto rows = repro_table();
    const Format fmt = opt.format.empty() ? Format::Csv : parse_format(opt.format);
    emit(render_repro(rows, fmt), opt.out);
    for (const auto& r : rows) {
      if (!r.pass) return kNumericFailure;
    }
    return kOk;
  }
  const Scenario s = load(opt);
  const Format fmt = parse_format(s.outputs.format);
  std::string text;
  if (command == "classify") {
    text = run_classify(s);
  } else if (command == "simulate") {
    text = run_simulate(s, fmt);
  } else if (command == "project") {
    text = run_project(s);
  } else if (command == "laplace") {
    text = run_laplace(s);
  } else if (command == "modal") {
    text = run_modal(s, opt.format.empty() ? Format::Json : fmt);
  } else if (command == "sweep") {
    text = run_sweep(s);
  }
  emit(text, s.outputs.path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance classification and exact response of periodically forced oscillators"};
  app.require_subcommand(1);
  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"classify", "Classify the response and write a JSON report"},
      {"simulate", "Sample the exact trajectory (t,x,xdot,f)"},
      {"project", "Inner products Q1, Q2 of the forcing over T3"},
      {"laplace", "F(s) and X(s) over a grid of complex s"},
      {"modal", "Per-mode reports or a w(x,t) grid for the forced wave equation"},
      {"sweep", "Classify across a grid of omega0 or forcing omega"},
      {"repro", "Check the golden value table"},
  };
  for (const auto& [name, help] : commands) {
    add_common(app.add_subcommand(name, help), opt, std::string(name) != "repro");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const resonalyze::NoExactRepresentation& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kNumericFailure;
  } catch (const resonalyze::AccuracyFailure& e) {
    std::cerr << "error: " << e.what() << " (estimate " << e.estimate() << ", error bound " << e.error_bound()
              << ")\n";
    return kNumericFailure;
  } catch (const resonalyze::PoleProximity& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}
