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

#include "resonalyze/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace resonalyze {

ScenarioError::ScenarioError(std::string field, const std::string& message, int line)
    : InvalidArgument((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + "field '" + field +
                      "': " + message),
      field_(std::move(field)),
      line_(line) {}

std::vector<double> GridAxis::values() const {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  if (count > 1) out.back() = to;
  return out;
}

PeriodicForcing ForcingDef::build() const {
  if (builtin) return make_builtin(*builtin, params);
  if (!period) throw InvalidArgument("custom forcing needs a period");
  return PeriodicForcing(*period, segments, name);
}

WaveProblem WaveDef::build() const {
  WaveProblem p;
  p.length = length;
  p.speed = speed;
  p.mode_count = mode_count;
  for (const auto& t : terms) p.forcing.push_back({t.mode, t.coefficient, t.profile.build()});
  validate(p);
  return p;
}

PeriodicForcing Scenario::build_forcing() const {
  if (!forcing) throw ScenarioError("forcing", "required for this command");
  return forcing->build();
}

const ScaledReal& Scenario::require_omega0() const {
  if (!omega0) throw ScenarioError("omega0", "required for this command");
  return *omega0;
}

OscillatorConfig Scenario::config() const {
  OscillatorConfig cfg;
  cfg.omega0 = require_omega0();
  cfg.x0 = x0;
  cfg.x1 = x1;
  cfg.damping = damping;
  return cfg;
}

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class Reader {
 public:
  Reader(const std::string& text, std::vector<SnappedValue>& snaps) : text_(text), snaps_(snaps) {}

  ExactnessOptions exactness;

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ScenarioError(path, message, line_of_field(path));
  }

  const Json& object(const Json& node, const std::string& path) const {
    if (!node.is_object()) fail(path, "expected an object");
    return node;
  }

  void check_keys(const Json& node, const std::string& path, std::initializer_list<std::string_view> allowed) const {
    object(node, path);
    for (const auto& item : node.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        fail(join(path, item.key()), "unknown field");
      }
    }
  }

  double number(const Json& node, const std::string& path) const {
    if (node.is_number()) {
      const double v = node.get<double>();
      if (!std::isfinite(v)) fail(path, "must be finite");
      return v;
    }
    if (node.is_string()) {
      try {
        return ScaledReal::parse(node.get<std::string>()).to_double();
      } catch (const InvalidArgument& e) {
        fail(path, e.what());
      }
    }
    fail(path, "expected a number");
  }

  int integer(const Json& node, const std::string& path) const {
    if (!node.is_number_integer()) fail(path, "expected an integer");
    const auto v = node.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(path, "out of range");
    return static_cast<int>(v);
  }

  bool boolean(const Json& node, const std::string& path) const {
    if (!node.is_boolean()) fail(path, "expected true or false");
    return node.get<bool>();
  }

  std::string string(const Json& node, const std::string& path) const {
    if (!node.is_string()) fail(path, "expected a string");
    return node.get<std::string>();
  }

  ScaledReal scaled(const Json& node, const std::string& path) const {
    try {
      if (node.is_string()) return ScaledReal::parse(node.get<std::string>());
      if (node.is_object()) return scaled_from_json(node);
    } catch (const InvalidArgument& e) {
      fail(path, e.what());
    }
    if (!node.is_number()) fail(path, "expected \"p/q*pi^e\", {num, den, piExp} or a number");
    const double x = node.get<double>();
    if (!std::isfinite(x)) fail(path, "must be finite");
    if (x == std::trunc(x) && std::fabs(x) < 9007199254740992.0) return ScaledReal::integer(static_cast<std::int64_t>(x));
    if (exactness.strict) {
      const Approximation a = float_to_scaled(x, exactness.max_denominator, 0);
      if (a.residual == 0.0) return a.value;
      throw NoExactRepresentation(path + ": float " + format_double(x) + " is not exact in strict mode", a.residual);
    }
    const double tol = exactness.tolerance * std::max(1.0, std::fabs(x));
    // Best residual wins across pi exponents; with 1e6 denominators a plain
    // rational can mimic 2 pi to 1e-12, so first-acceptable would be wrong.
    std::optional<Approximation> chosen;
    int chosen_hint = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int hint : {0, 1, -1, 2, -2}) {
      const Approximation a = float_to_scaled(x, exactness.max_denominator, hint);
      best = std::min(best, a.residual);
      if (a.residual > tol) continue;
      if (!chosen || a.residual < chosen->residual ||
          (a.residual == chosen->residual && a.value.denominator() < chosen->value.denominator())) {
        chosen = a;
        chosen_hint = hint;
      }
    }
    if (chosen) {
      if (chosen->residual > 0.0 || chosen_hint != 0) snaps_.push_back({path, x, chosen->value, chosen->residual});
      return chosen->value;
    }
    throw NoExactRepresentation(path + ": no q*pi^e within tolerance for " + format_double(x), best);
  }

  ScaledReal positive(const Json& node, const std::string& path) const {
    ScaledReal v = scaled(node, path);
    if (v.sign() <= 0) fail(path, "must be positive");
    return v;
  }

  GridAxis axis(const Json& node, const std::string& path) const {
    check_keys(node, path, {"from", "to", "count"});
    GridAxis a;
    if (!node.contains("count")) fail(join(path, "count"), "required");
    a.count = integer(node["count"], join(path, "count"));
    if (a.count < 0) fail(join(path, "count"), "must be non-negative");
    if (a.count > 0) {
      if (!node.contains("from")) fail(join(path, "from"), "required");
      a.from = number(node["from"], join(path, "from"));
      a.to = node.contains("to") ? number(node["to"], join(path, "to")) : a.from;
    }
    return a;
  }

  ForcingDef forcing(const Json& node, const std::string& path) const {
    object(node, path);
    ForcingDef def;
    if (node.contains("builtin")) {
      check_keys(node, path, {"builtin", "params"});
      const std::string name = string(node["builtin"], join(path, "builtin"));
      def.builtin = builtin_from_name(name);
      if (!def.builtin) fail(join(path, "builtin"), "unknown builtin '" + name + "'");
      def.name = name;
      const std::string ppath = join(path, "params");
      const Json params = node.contains("params") ? node["params"] : Json::object();
      read_params(*def.builtin, params, ppath, def.params);
    } else {
      check_keys(node, path, {"period", "segments", "name"});
      if (!node.contains("period")) fail(join(path, "period"), "required (or give a builtin)");
      def.period = positive(node["period"], join(path, "period"));
      if (node.contains("name")) def.name = string(node["name"], join(path, "name"));
      const std::string spath = join(path, "segments");
      if (!node.contains("segments") || !node["segments"].is_array() || node["segments"].empty()) {
        fail(spath, "expected a non-empty array");
      }
      for (std::size_t i = 0; i < node["segments"].size(); ++i) {
        def.segments.push_back(segment(node["segments"][i], spath + "[" + std::to_string(i) + "]"));
      }
    }
    try {
      (void)def.build();
    } catch (const InvalidArgument& e) {
      fail(path, e.what());
    }
    return def;
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }

 private:
  int line_of_field(const std::string& path) const {
    std::string key = path.substr(path.find_last_of('.') + 1);
    key = key.substr(0, key.find('['));
    const std::string quoted = "\"" + key + "\"";
    const std::size_t first = text_.find(quoted);
    if (first == std::string::npos || text_.find(quoted, first + 1) != std::string::npos) return 0;
    return line_of_offset(text_, first);
  }

  TrigKind trig_kind(const Json& node, const std::string& path) const {
    const std::string k = string(node, path);
    if (k == "sin") return TrigKind::Sin;
    if (k == "cos") return TrigKind::Cos;
    fail(path, "expected \"sin\" or \"cos\"");
  }

  void read_params(BuiltinKind kind, const Json& p, const std::string& path, BuiltinParams& out) const {
    switch (kind) {
      case BuiltinKind::Sinusoid:
        check_keys(p, path, {"amplitude", "omega", "kind", "phase"});
        if (!p.contains("omega")) fail(join(path, "omega"), "required");
        out.omega = positive(p["omega"], join(path, "omega"));
        if (p.contains("amplitude")) out.amplitude = number(p["amplitude"], join(path, "amplitude"));
        if (p.contains("kind")) out.kind = trig_kind(p["kind"], join(path, "kind"));
        if (p.contains("phase")) out.phase = number(p["phase"], join(path, "phase"));
        if (out.amplitude == 0.0) fail(join(path, "amplitude"), "zero amplitude gives a constant forcing");
        break;
      case BuiltinKind::Triangle:
      case BuiltinKind::StepSymmetric:
        check_keys(p, path, {"period"});
        if (!p.contains("period")) fail(join(path, "period"), "required");
        out.period = positive(p["period"], join(path, "period"));
        break;
      case BuiltinKind::RectAbs:
      case BuiltinKind::RectHalf:
        check_keys(p, path, {"T0"});
        if (!p.contains("T0")) fail(join(path, "T0"), "required");
        out.t0 = positive(p["T0"], join(path, "T0"));
        break;
      case BuiltinKind::CancellationStep:
        check_keys(p, path, {"levelA", "period"});
        if (p.contains("levelA")) out.level_a = number(p["levelA"], join(path, "levelA"));
        if (!(out.level_a > 0.0)) fail(join(path, "levelA"), "must be positive");
        if (p.contains("period")) out.period = positive(p["period"], join(path, "period"));
        break;
    }
  }

  ForcingSegment segment(const Json& node, const std::string& path) const {
    check_keys(node, path, {"start", "end", "terms"});
    ForcingSegment seg;
    if (!node.contains("start") || !node.contains("end")) fail(path, "start and end are required");
    seg.start = number(node["start"], join(path, "start"));
    seg.end = number(node["end"], join(path, "end"));
    if (node.contains("terms")) {
      const std::string tpath = join(path, "terms");
      if (!node["terms"].is_array()) fail(tpath, "expected an array");
      for (std::size_t i = 0; i < node["terms"].size(); ++i) {
        const std::string ipath = tpath + "[" + std::to_string(i) + "]";
        const Json& t = node["terms"][i];
        check_keys(t, ipath, {"poly", "trig"});
        if (!t.contains("poly") || !t["poly"].is_array() || t["poly"].empty()) {
          fail(join(ipath, "poly"), "expected a non-empty array of coefficients");
        }
        std::vector<double> poly;
        for (std::size_t k = 0; k < t["poly"].size(); ++k) {
          poly.push_back(number(t["poly"][k], join(ipath, "poly") + "[" + std::to_string(k) + "]"));
        }
        std::optional<Trig> trig;
        if (t.contains("trig")) {
          const std::string gpath = join(ipath, "trig");
          const Json& g = t["trig"];
          check_keys(g, gpath, {"kind", "freq", "phase"});
          Trig tr;
          if (g.contains("kind")) tr.kind = trig_kind(g["kind"], join(gpath, "kind"));
          if (!g.contains("freq")) fail(join(gpath, "freq"), "required");
          tr.freq = number(g["freq"], join(gpath, "freq"));
          if (g.contains("phase")) tr.phase = number(g["phase"], join(gpath, "phase"));
          trig = tr;
        }
        try {
          seg.terms.emplace_back(std::move(poly), trig);
        } catch (const InvalidArgument& e) {
          fail(ipath, e.what());
        }
      }
    }
    return seg;
  }

  const std::string& text_;
  std::vector<SnappedValue>& snaps_;
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ScenarioError("<document>", e.what(), line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  Scenario s;
  Reader r(text, s.snapped);
  r.check_keys(doc, "", {"name", "forcing", "omega0", "initial", "damping", "time", "classifier", "outputs",
                         "exactness", "project", "laplace", "sweep", "wave"});

  if (doc.contains("exactness")) {
    const Json& e = doc["exactness"];
    r.check_keys(e, "exactness", {"maxDenominator", "tolerance", "strict"});
    if (e.contains("maxDenominator")) {
      const int v = r.integer(e["maxDenominator"], "exactness.maxDenominator");
      if (v < 1) r.fail("exactness.maxDenominator", "must be at least 1");
      s.exactness.max_denominator = v;
    }
    if (e.contains("tolerance")) {
      s.exactness.tolerance = r.number(e["tolerance"], "exactness.tolerance");
      if (!(s.exactness.tolerance >= 0.0)) r.fail("exactness.tolerance", "must be non-negative");
    }
    if (e.contains("strict")) s.exactness.strict = r.boolean(e["strict"], "exactness.strict");
  }
  r.exactness = s.exactness;

  if (doc.contains("name")) s.name = r.string(doc["name"], "name");
  if (doc.contains("forcing")) s.forcing = r.forcing(doc["forcing"], "forcing");
  if (doc.contains("omega0")) s.omega0 = r.positive(doc["omega0"], "omega0");
  if (doc.contains("initial")) {
    const Json& ic = doc["initial"];
    if (!ic.is_array() || ic.size() != 2) r.fail("initial", "expected [x0, x1]");
    s.x0 = r.number(ic[0], "initial[0]");
    s.x1 = r.number(ic[1], "initial[1]");
  }
  if (doc.contains("damping")) {
    s.damping = r.number(doc["damping"], "damping");
    if (s.damping < 0.0) r.fail("damping", "must be non-negative");
  }
  if (doc.contains("time")) {
    const Json& t = doc["time"];
    r.check_keys(t, "time", {"t0", "t1", "samples"});
    if (t.contains("t0")) s.time.t0 = r.number(t["t0"], "time.t0");
    if (t.contains("t1")) s.time.t1 = r.number(t["t1"], "time.t1");
    if (t.contains("samples")) s.time.samples = r.integer(t["samples"], "time.samples");
    if (s.time.t0 < 0.0) r.fail("time.t0", "must be non-negative");
    if (s.time.t1 && !(*s.time.t1 > s.time.t0)) r.fail("time.t1", "must exceed t0");
    if (s.time.samples < 2) r.fail("time.samples", "must be at least 2");
  }
  if (doc.contains("classifier")) {
    const Json& c = doc["classifier"];
    r.check_keys(c, "classifier", {"qTol", "strictMinimality", "maxDivisor"});
    if (c.contains("qTol")) {
      s.classifier.q_tol = r.number(c["qTol"], "classifier.qTol");
      if (!(s.classifier.q_tol > 0.0)) r.fail("classifier.qTol", "must be positive");
    }
    if (c.contains("strictMinimality")) {
      s.classifier.strict_minimality = r.boolean(c["strictMinimality"], "classifier.strictMinimality");
    }
    if (c.contains("maxDivisor")) {
      s.classifier.max_divisor = r.integer(c["maxDivisor"], "classifier.maxDivisor");
      if (s.classifier.max_divisor < 2) r.fail("classifier.maxDivisor", "must be at least 2");
    }
  }
  if (doc.contains("outputs")) {
    const Json& o = doc["outputs"];
    r.check_keys(o, "outputs", {"format", "path"});
    if (o.contains("format")) s.outputs.format = r.string(o["format"], "outputs.format");
    if (s.outputs.format != "csv" && s.outputs.format != "json") r.fail("outputs.format", "expected csv or json");
    if (o.contains("path")) s.outputs.path = r.string(o["path"], "outputs.path");
  }
  if (doc.contains("project")) {
    const Json& p = doc["project"];
    r.check_keys(p, "project", {"periods"});
    if (p.contains("periods")) {
      const int k = r.integer(p["periods"], "project.periods");
      if (k < 1) r.fail("project.periods", "must be at least 1");
      s.project_periods = k;
    }
  }
  if (doc.contains("laplace")) {
    const Json& l = doc["laplace"];
    r.check_keys(l, "laplace", {"re", "im"});
    LaplaceGrid def;
    if (l.contains("re")) def.re = r.axis(l["re"], "laplace.re");
    if (l.contains("im")) def.im = r.axis(l["im"], "laplace.im");
    s.laplace = def;
  }
  if (doc.contains("sweep")) {
    const Json& w = doc["sweep"];
    r.check_keys(w, "sweep", {"param", "values", "grid"});
    SweepPlan def;
    if (w.contains("param")) def.param = r.string(w["param"], "sweep.param");
    if (def.param != "omega0" && def.param != "omega") r.fail("sweep.param", "expected omega0 or omega");
    if (w.contains("values")) {
      if (!w["values"].is_array()) r.fail("sweep.values", "expected an array");
      for (std::size_t i = 0; i < w["values"].size(); ++i) {
        def.values.push_back(r.positive(w["values"][i], "sweep.values[" + std::to_string(i) + "]"));
      }
    }
    if (w.contains("grid")) {
      // Exact rational grid from + i (to - from)/(count - 1), times pi^piExp.
      const Json& g = w["grid"];
      r.check_keys(g, "sweep.grid", {"from", "to", "count", "piExp"});
      if (!g.contains("count")) r.fail("sweep.grid.count", "required");
      const int count = r.integer(g["count"], "sweep.grid.count");
      if (count < 0) r.fail("sweep.grid.count", "must be non-negative");
      const int pi_exp = g.contains("piExp") ? r.integer(g["piExp"], "sweep.grid.piExp") : 0;
      if (count > 0) {
        if (!g.contains("from")) r.fail("sweep.grid.from", "required");
        const ScaledReal from = r.scaled(g["from"], "sweep.grid.from");
        const ScaledReal to = g.contains("to") ? r.scaled(g["to"], "sweep.grid.to") : from;
        if (from.pi_exponent() != 0 || to.pi_exponent() != 0) {
          r.fail("sweep.grid", "from/to are rational coefficients; use piExp for powers of pi");
        }
        for (int i = 0; i < count; ++i) {
          BigRational c = from.coeff();
          if (count > 1) c += (to.coeff() - from.coeff()) * BigRational(i, count - 1);
          if (c <= 0) r.fail("sweep.grid", "values must be positive");
          def.values.emplace_back(c, pi_exp);
        }
      }
    }
    s.sweep = std::move(def);
  }
  if (doc.contains("wave")) {
    const Json& w = doc["wave"];
    r.check_keys(w, "wave", {"length", "speed", "modeCount", "terms", "grid"});
    WaveDef def;
    if (w.contains("length")) def.length = r.positive(w["length"], "wave.length");
    if (w.contains("speed")) def.speed = r.positive(w["speed"], "wave.speed");
    if (w.contains("terms")) {
      if (!w["terms"].is_array()) r.fail("wave.terms", "expected an array");
      for (std::size_t i = 0; i < w["terms"].size(); ++i) {
        const std::string path = "wave.terms[" + std::to_string(i) + "]";
        const Json& t = w["terms"][i];
        r.check_keys(t, path, {"mode", "coefficient", "forcing"});
        WaveTerm term;
        if (!t.contains("mode")) r.fail(path + ".mode", "required");
        term.mode = r.integer(t["mode"], path + ".mode");
        if (t.contains("coefficient")) term.coefficient = r.number(t["coefficient"], path + ".coefficient");
        if (!t.contains("forcing")) r.fail(path + ".forcing", "required");
        term.profile = r.forcing(t["forcing"], path + ".forcing");
        def.terms.push_back(std::move(term));
      }
    }
    int highest = 1;
    for (const auto& t : def.terms) highest = std::max(highest, t.mode);
    def.mode_count = w.contains("modeCount") ? r.integer(w["modeCount"], "wave.modeCount") : highest;
    if (w.contains("grid")) {
      const Json& g = w["grid"];
      r.check_keys(g, "wave.grid", {"x", "t"});
      if (!g.contains("x") || !g.contains("t")) r.fail("wave.grid", "needs both x and t axes");
      def.grid_x = r.axis(g["x"], "wave.grid.x");
      def.grid_t = r.axis(g["t"], "wave.grid.t");
    }
    try {
      (void)def.build();
    } catch (const ScenarioError&) {
      throw;
    } catch (const InvalidArgument& e) {
      r.fail("wave", e.what());
    }
    s.wave = std::move(def);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  if (path.extension() == ".toml") throw ScenarioError("<file>", "TOML scenarios are not supported; use JSON");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("<file>", "cannot read scenario " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

namespace {

std::string_view trig_name(TrigKind k) { return k == TrigKind::Sin ? "sin" : "cos"; }

Json axis_json(const GridAxis& a) {
  Json j;
  j["from"] = a.from;
  j["to"] = a.to;
  j["count"] = a.count;
  return j;
}

Json forcing_json(const ForcingDef& f) {
  Json j;
  if (f.builtin) {
    j["builtin"] = builtin_name(*f.builtin);
    Json p = Json::object();
    const BuiltinParams& b = f.params;
    switch (*f.builtin) {
      case BuiltinKind::Sinusoid:
        p["amplitude"] = b.amplitude;
        p["omega"] = to_json(*b.omega);
        p["kind"] = trig_name(b.kind);
        p["phase"] = b.phase;
        break;
      case BuiltinKind::Triangle:
      case BuiltinKind::StepSymmetric:
        p["period"] = to_json(*b.period);
        break;
      case BuiltinKind::RectAbs:
      case BuiltinKind::RectHalf:
        p["T0"] = to_json(*b.t0);
        break;
      case BuiltinKind::CancellationStep:
        p["levelA"] = b.level_a;
        if (b.period) p["period"] = to_json(*b.period);
        break;
    }
    j["params"] = std::move(p);
    return j;
  }
  j["name"] = f.name;
  j["period"] = to_json(*f.period);
  Json segs = Json::array();
  for (const auto& seg : f.segments) {
    Json sj;
    sj["start"] = seg.start;
    sj["end"] = seg.end;
    Json terms = Json::array();
    for (const auto& t : seg.terms) {
      Json tj;
      tj["poly"] = t.poly();
      if (t.trig()) {
        Json g;
        g["kind"] = trig_name(t.trig()->kind);
        g["freq"] = t.trig()->freq;
        g["phase"] = t.trig()->phase;
        tj["trig"] = std::move(g);
      }
      terms.push_back(std::move(tj));
    }
    sj["terms"] = std::move(terms);
    segs.push_back(std::move(sj));
  }
  j["segments"] = std::move(segs);
  return j;
}

}  // namespace

Json to_json(const Scenario& s) {
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  if (s.forcing) j["forcing"] = forcing_json(*s.forcing);
  if (s.omega0) j["omega0"] = to_json(*s.omega0);
  j["initial"] = {s.x0, s.x1};
  j["damping"] = s.damping;
  Json t;
  t["t0"] = s.time.t0;
  if (s.time.t1) t["t1"] = *s.time.t1;
  t["samples"] = s.time.samples;
  j["time"] = std::move(t);
  Json c;
  c["qTol"] = s.classifier.q_tol;
  c["strictMinimality"] = s.classifier.strict_minimality;
  c["maxDivisor"] = s.classifier.max_divisor;
  j["classifier"] = std::move(c);
  Json o;
  o["format"] = s.outputs.format;
  if (!s.outputs.path.empty()) o["path"] = s.outputs.path;
  j["outputs"] = std::move(o);
  Json e;
  e["maxDenominator"] = s.exactness.max_denominator;
  e["tolerance"] = s.exactness.tolerance;
  e["strict"] = s.exactness.strict;
  j["exactness"] = std::move(e);
  if (s.project_periods) j["project"] = Json{{"periods", *s.project_periods}};
  if (s.laplace) j["laplace"] = Json{{"re", axis_json(s.laplace->re)}, {"im", axis_json(s.laplace->im)}};
  if (s.sweep) {
    Json values = Json::array();
    for (const auto& v : s.sweep->values) values.push_back(to_json(v));
    j["sweep"] = Json{{"param", s.sweep->param}, {"values", std::move(values)}};
  }
  if (s.wave) {
    Json w;
    w["length"] = to_json(s.wave->length);
    w["speed"] = to_json(s.wave->speed);
    w["modeCount"] = s.wave->mode_count;
    Json terms = Json::array();
    for (const auto& term : s.wave->terms) {
      terms.push_back(Json{{"mode", term.mode}, {"coefficient", term.coefficient}, {"forcing", forcing_json(term.profile)}});
    }
    w["terms"] = std::move(terms);
    if (s.wave->grid_x) w["grid"] = Json{{"x", axis_json(*s.wave->grid_x)}, {"t", axis_json(*s.wave->grid_t)}};
    j["wave"] = std::move(w);
  }
  return j;
}

std::string serialize(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

}  // namespace resonalyze
