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

#include "resonalyze/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "resonalyze/errors.hpp"

namespace resonalyze {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

const BigInt kSafeInteger = BigInt(1) << 53;

Json integer_json(const BigInt& v) {
  if (abs(v) < kSafeInteger) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt integer_from_json(const Json& node, const char* what) {
  if (node.is_number_integer()) return BigInt(node.get<std::int64_t>());
  if (node.is_string()) {
    try {
      return BigInt(node.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument(std::string("expected an integer for '") + what + "'");
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const ScaledReal& v) {
  Json j;
  j["num"] = integer_json(v.numerator());
  j["den"] = integer_json(v.denominator());
  j["piExp"] = v.pi_exponent();
  return j;
}

ScaledReal scaled_from_json(const Json& node) {
  if (!node.is_object() || !node.contains("num") || !node.contains("den")) {
    throw InvalidArgument("expected {\"num\", \"den\", \"piExp\"}");
  }
  int pi_exp = 0;
  if (node.contains("piExp")) {
    if (!node["piExp"].is_number_integer()) throw InvalidArgument("piExp must be an integer");
    pi_exp = node["piExp"].get<int>();
  }
  return ScaledReal::make(integer_from_json(node["num"], "num"), integer_from_json(node["den"], "den"), pi_exp);
}

Json to_json(const RatioClass& alpha) {
  if (!alpha.is_rational()) return "irrational";
  Json j;
  j["m"] = integer_json(alpha.rational->m);
  j["n"] = integer_json(alpha.rational->n);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["caseId"] = c.case_id;
  j["verdict"] = verdict_name(c.verdict);
  j["alpha"] = to_json(c.alpha);
  j["omega0"] = to_json(c.omega0_exact);
  j["T1"] = to_json(c.t1);
  j["T2"] = to_json(c.t2);
  j["T3"] = c.t3 ? to_json(*c.t3) : Json(nullptr);
  j["Q1"] = optional_number(c.q1);
  j["Q2"] = optional_number(c.q2);
  j["qTolerance"] = c.q_tolerance;
  j["qThreshold"] = c.q_threshold;
  j["supNorm"] = c.sup_f;
  j["supBound"] = optional_number(c.sup_bound);
  j["growthPerCycle"] = optional_number(c.growth_per_cycle);
  return j;
}

Json to_json(const Projection& p) {
  Json j;
  j["Q1"] = p.q1;
  j["Q2"] = p.q2;
  j["T3"] = p.t3;
  return j;
}

Json to_json(const Trajectory& traj) {
  Json j;
  j["method"] = method_name(traj.method);
  j["forcing"] = traj.forcing_name;
  Json cfg;
  cfg["omega0"] = to_json(traj.config.omega0);
  cfg["x0"] = traj.config.x0;
  cfg["x1"] = traj.config.x1;
  cfg["damping"] = traj.config.damping;
  j["config"] = std::move(cfg);
  Json rows = Json::array();
  for (const auto& s : traj.samples) {
    Json row;
    row["t"] = s.t;
    row["x"] = s.x;
    row["xdot"] = s.xdot;
    row["f"] = s.f;
    rows.push_back(std::move(row));
  }
  j["samples"] = std::move(rows);
  return j;
}

void write_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,x,xdot,f\n";
  for (const auto& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.xdot) << ','
        << format_double(s.f) << '\n';
  }
}

}  // namespace resonalyze
