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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "resonalyze/classifier.hpp"
#include "resonalyze/errors.hpp"
#include "resonalyze/forcing.hpp"
#include "resonalyze/modal.hpp"
#include "resonalyze/report.hpp"

namespace resonalyze {

/// Schema violation located by field path (and by line when it can be found).
class ScenarioError : public InvalidArgument {
 public:
  ScenarioError(std::string field, const std::string& message, int line = 0);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

struct ExactnessOptions {
  std::int64_t max_denominator = 1000000;
  double tolerance = 1e-12;  // relative residual accepted when snapping a float
  bool strict = false;       // reject floats that are not exact integers
};

// A float input replaced by the nearest q * pi^e.
struct SnappedValue {
  std::string field;
  double input;
  ScaledReal value;
  double residual;
};

struct ForcingDef {
  std::optional<BuiltinKind> builtin;
  BuiltinParams params;
  // Custom piecewise definition when builtin is empty.
  std::optional<ScaledReal> period;
  std::vector<ForcingSegment> segments;
  std::string name = "custom";

  PeriodicForcing build() const;
};

struct GridAxis {
  double from = 0.0;
  double to = 0.0;
  int count = 1;
  std::vector<double> values() const;
};

struct LaplaceGrid {
  GridAxis re{0.5, 2.0, 4};
  GridAxis im{0.0, 0.0, 1};
};

struct SweepPlan {
  std::string param = "omega0";  // omega0 | omega
  std::vector<ScaledReal> values;
};

struct WaveTerm {
  int mode = 1;
  double coefficient = 1.0;
  ForcingDef profile;
};

struct WaveDef {
  ScaledReal length = ScaledReal::pi();
  ScaledReal speed = ScaledReal::integer(1);
  int mode_count = 1;
  std::vector<WaveTerm> terms;
  std::optional<GridAxis> grid_x;
  std::optional<GridAxis> grid_t;

  WaveProblem build() const;
};

struct TimeWindow {
  double t0 = 0.0;
  std::optional<double> t1;  // defaults to 20 forcing periods
  int samples = 2001;
};

struct OutputTarget {
  std::string format = "csv";
  std::string path;
};

struct Scenario {
  std::string name;
  std::optional<ForcingDef> forcing;
  std::optional<ScaledReal> omega0;
  double x0 = 0.0;
  double x1 = 0.0;
  double damping = 0.0;
  TimeWindow time;
  ClassifierOptions classifier;
  OutputTarget outputs;
  ExactnessOptions exactness;
  std::optional<std::int64_t> project_periods;
  std::optional<LaplaceGrid> laplace;
  std::optional<SweepPlan> sweep;
  std::optional<WaveDef> wave;
  std::vector<SnappedValue> snapped;

  // Throw ScenarioError naming the missing section.
  PeriodicForcing build_forcing() const;
  const ScaledReal& require_omega0() const;
  OscillatorConfig config() const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

Json to_json(const Scenario& s);
std::string serialize(const Scenario& s);

}  // namespace resonalyze
