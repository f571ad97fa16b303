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

#include <string>
#include <vector>

#include "resonalyze/scenario.hpp"

namespace resonalyze {

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

// Each command renders its full output document; the caller writes it.
std::string run_classify(const Scenario& s);
std::string run_simulate(const Scenario& s, Format format);
std::string run_project(const Scenario& s);
std::string run_laplace(const Scenario& s);
std::string run_modal(const Scenario& s, Format format);
// threads = 0 selects the hardware concurrency; RESONALYZE_THREADS caps it either way.
std::string run_sweep(const Scenario& s, unsigned threads = 0);

struct ReproRow {
  std::string item;
  std::string computed;
  std::string expected;
  bool pass;
};

std::vector<ReproRow> repro_table();
std::string render_repro(const std::vector<ReproRow>& rows, Format format);

// min(requested or hardware concurrency, RESONALYZE_THREADS), at least 1.
unsigned sweep_threads(unsigned requested);

}  // namespace resonalyze
