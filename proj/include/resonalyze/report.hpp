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

#include <ostream>
#include <string>

#include <json.hpp>

#include "resonalyze/classifier.hpp"
#include "resonalyze/exactnum.hpp"
#include "resonalyze/oscillator.hpp"
#include "resonalyze/quadrature.hpp"

namespace resonalyze {

using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

// {"num": p, "den": q, "piExp": e}; p and q become strings past 2^53.
Json to_json(const ScaledReal& v);
ScaledReal scaled_from_json(const Json& node);

Json to_json(const RatioClass& alpha);
Json to_json(const Classification& c);
Json to_json(const Projection& p);
Json to_json(const Trajectory& traj);

// Header "t,x,xdot,f" then one row per sample.
void write_csv(const Trajectory& traj, std::ostream& out);

}  // namespace resonalyze
