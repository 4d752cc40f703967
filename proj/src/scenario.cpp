#include "lshare/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "lshare/error.hpp"

namespace lshare {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what, const std::string& code) {
  throw Error(ErrorKind::Config, (path.empty() ? std::string("config") : path) + ": " + what, code);
}

// A JSON object whose keys are checked against a fixed list.
class Object {
public:
  Object(const json& j, std::string path, std::initializer_list<const char*> allowed) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) fail(path_, "expected an object", "E_TYPE");
    for (const auto& [key, value] : j.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
        fail(path_, "unknown field \"" + key + "\"", "E_UNKNOWN_FIELD");
    }
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  bool has(const char* key) const { return j_.contains(key); }

  const json& required(const char* key) const {
    if (!j_.contains(key)) fail(at(key), "missing required field", "E_MISSING_FIELD");
    return j_.at(key);
  }

  double number(const char* key) const {
    const json& v = required(key);
    if (!v.is_number()) fail(at(key), "expected a number", "E_TYPE");
    return v.get<double>();
  }
  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  std::uint64_t count(const char* key) const {
    const json& v = required(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail(at(key), "expected a nonnegative integer", "E_TYPE");
    return v.get<std::uint64_t>();
  }
  std::uint64_t count(const char* key, std::uint64_t fallback) const { return has(key) ? count(key) : fallback; }

  std::string string(const char* key) const {
    const json& v = required(key);
    if (!v.is_string()) fail(at(key), "expected a string", "E_TYPE");
    return v.get<std::string>();
  }
  std::string string(const char* key, const std::string& fallback) const { return has(key) ? string(key) : fallback; }

  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) fail(at(key), "expected true or false", "E_TYPE");
    return v.get<bool>();
  }

  const json& array(const char* key) const {
    const json& v = required(key);
    if (!v.is_array()) fail(at(key), "expected an array", "E_TYPE");
    return v;
  }

private:
  const json& j_;
  std::string path_;
};

// Library validation errors surface as config errors with their own code.
template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) throw;
    fail(path, e.what(), e.diagnostic().empty() ? "E_INVALID" : e.diagnostic());
  }
}

std::string kind_of(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind")) fail(path, "missing \"kind\"", "E_MISSING_FIELD");
  if (!j.at("kind").is_string()) fail(path + ".kind", "expected a string", "E_TYPE");
  return j.at("kind").get<std::string>();
}

LifetimeDistribution distribution(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "exponential") {
    Object o(j, path, {"kind", "rate"});
    return guarded(path, [&] { return LifetimeDistribution::exponential(o.number("rate")); });
  }
  if (kind == "weibull") {
    Object o(j, path, {"kind", "shape", "scale"});
    return guarded(path, [&] { return LifetimeDistribution::weibull(o.number("shape"), o.number("scale")); });
  }
  if (kind == "shifted_pareto") {
    Object o(j, path, {"kind", "k", "sigma"});
    return guarded(path, [&] { return LifetimeDistribution::shifted_pareto(o.number("k"), o.number("sigma")); });
  }
  if (kind == "piecewise_poly_cdf") {
    Object o(j, path, {"kind", "segments"});
    const json& segs = o.array("segments");
    std::vector<PolySegment> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string sp = o.at("segments") + "[" + std::to_string(i) + "]";
      Object s(segs[i], sp, {"from", "to", "coeffs"});
      PolySegment seg{s.number("from"), s.number("to"), {}};
      for (const json& c : s.array("coeffs")) {
        if (!c.is_number()) fail(s.at("coeffs"), "coefficients must be numbers", "E_TYPE");
        seg.coeffs.push_back(c.get<double>());
      }
      out.push_back(std::move(seg));
    }
    return guarded(path, [&] { return LifetimeDistribution::piecewise(std::move(out)); });
  }
  fail(path + ".kind", "unknown distribution kind \"" + kind + "\"", "E_UNKNOWN_KIND");
}

LoadScale load_scale(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "identity") {
    Object o(j, path, {"kind"});
    return LoadScale::identity();
  }
  if (kind == "power") {
    Object o(j, path, {"kind", "p"});
    return guarded(path, [&] { return LoadScale::power(o.number("p")); });
  }
  if (kind == "constant") {
    Object o(j, path, {"kind", "c"});
    return guarded(path, [&] { return LoadScale::constant(o.number("c")); });
  }
  fail(path + ".kind", "unknown load scale kind \"" + kind + "\"", "E_UNKNOWN_KIND");
}

VirtualAge virtual_age(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "cem") {
    Object o(j, path, {"kind"});
    return VirtualAge::cem();
  }
  if (kind == "linear") {
    Object o(j, path, {"kind", "c"});
    return guarded(path, [&] { return VirtualAge::linear(o.number("c")); });
  }
  if (kind == "piecewise_linear") {
    Object o(j, path, {"kind", "knots"});
    std::vector<std::pair<double, double>> knots;
    for (const json& k : o.array("knots")) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number())
        fail(o.at("knots"), "each knot is a [u, w] pair of numbers", "E_TYPE");
      knots.emplace_back(k[0].get<double>(), k[1].get<double>());
    }
    return guarded(path, [&] { return VirtualAge::piecewise_linear(std::move(knots)); });
  }
  fail(path + ".kind", "unknown virtual age kind \"" + kind + "\"", "E_UNKNOWN_KIND");
}

ModelFunctionPair model(const json* j, const std::string& path) {
  if (!j) return ModelFunctionPair{VirtualAge::cem(), LoadScale::identity()};
  Object o(*j, path, {"load_scale", "virtual_age"});
  return ModelFunctionPair{o.has("virtual_age") ? virtual_age(o.required("virtual_age"), o.at("virtual_age"))
                                                : VirtualAge::cem(),
                           o.has("load_scale") ? load_scale(o.required("load_scale"), o.at("load_scale"))
                                               : LoadScale::identity()};
}

Component component(const json& j, const std::string& path) {
  Object o(j, path, {"distribution", "model"});
  return Component{distribution(o.required("distribution"), o.at("distribution")),
                   model(o.has("model") ? &o.required("model") : nullptr, o.at("model"))};
}

std::size_t index(const Object& o, const char* key, std::size_t fallback, std::size_t n) {
  const std::uint64_t i = o.count(key, fallback);
  if (i < 1 || i > n) fail(o.at(key), "index must lie in 1.." + std::to_string(n), "E_ALLOCATION");
  return static_cast<std::size_t>(i);
}

GridSpec grid(const json& j, const std::string& path) {
  Object o(j, path, {"start", "stop", "points", "spacing"});
  GridSpec g{o.number("start"), o.number("stop"), static_cast<std::size_t>(o.count("points")), Spacing::Linear};
  const std::string spacing = o.string("spacing", "linear");
  if (spacing == "log")
    g.spacing = Spacing::Log;
  else if (spacing != "linear")
    fail(o.at("spacing"), "spacing must be \"linear\" or \"log\"", "E_GRID");
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || g.start < 0.0 || g.stop < g.start)
    fail(path, "grid needs finite 0 <= start <= stop", "E_GRID");
  if (g.spacing == Spacing::Log && !(g.start > 0.0)) fail(path, "log spacing needs start > 0", "E_GRID");
  return g;
}

void quadrature(const json& j, const std::string& path, QuadratureConfig& q) {
  Object o(j, path, {"abs_tol", "rel_tol", "max_subdivisions"});
  q.abs_tol = o.number("abs_tol", q.abs_tol);
  q.rel_tol = o.number("rel_tol", q.rel_tol);
  q.max_subdivisions = static_cast<int>(o.count("max_subdivisions", static_cast<std::uint64_t>(q.max_subdivisions)));
  guarded(path, [&] {
    q.validate();
    return 0;
  });
}

void mc(const json& j, const std::string& path, SimConfig& c) {
  Object o(j, path, {"samples", "seed", "threads"});
  c.samples = o.count("samples", c.samples);
  c.seed = o.count("seed", c.seed);
  c.threads = static_cast<unsigned>(o.count("threads", c.threads));
  guarded(path, [&] {
    c.validate();
    return 0;
  });
}

void order(const json& j, const std::string& path, std::size_t n, OrderOptions& out) {
  Object o(j, path, {"first", "second", "relations", "directions", "points"});
  out.first = index(o, "first", out.first, n);
  out.second = index(o, "second", out.second, n);
  out.points = static_cast<std::size_t>(o.count("points", out.points));
  if (out.points < 3) fail(o.at("points"), "order grids need at least 3 points", "E_GRID");
  if (o.has("relations")) {
    out.relations.clear();
    for (const json& r : o.array("relations")) {
      const std::string s = r.is_string() ? r.get<std::string>() : "";
      if (s == "st")
        out.relations.push_back(Relation::St);
      else if (s == "hr")
        out.relations.push_back(Relation::Hr);
      else if (s == "rhr")
        out.relations.push_back(Relation::Rhr);
      else
        fail(o.at("relations"), "relations are \"st\", \"hr\" or \"rhr\"", "E_UNKNOWN_KIND");
    }
  }
  if (o.has("directions")) {
    out.directions.clear();
    for (const json& d : o.array("directions")) {
      const std::string s = d.is_string() ? d.get<std::string>() : "";
      if (s == "le")
        out.directions.push_back(Direction::LessEq);
      else if (s == "ge")
        out.directions.push_back(Direction::GreaterEq);
      else
        fail(o.at("directions"), "directions are \"le\" or \"ge\"", "E_UNKNOWN_KIND");
    }
  }
}

void verify(const json& j, const std::string& path, VerifySettings& v) {
  Object o(j, path, {"theorem", "slack", "grid_points", "horizon", "simulate", "simulation_points"});
  if (o.has("theorem")) {
    const std::string s = o.string("theorem");
    v.theorem = parse_theorem(s);
    if (!v.theorem) fail(o.at("theorem"), "unknown theorem \"" + s + "\"", "E_UNKNOWN_KIND");
  }
  v.options.slack = o.number("slack", v.options.slack);
  if (!(v.options.slack >= 0.0)) fail(o.at("slack"), "slack must be nonnegative", "E_INVALID");
  v.options.grid_points = static_cast<std::size_t>(o.count("grid_points", v.options.grid_points));
  if (v.options.grid_points < 3) fail(o.at("grid_points"), "conclusion grid needs at least 3 points", "E_GRID");
  if (o.has("horizon")) {
    const double h = o.number("horizon");
    if (!(h > 0.0) || !std::isfinite(h)) fail(o.at("horizon"), "horizon must be positive", "E_GRID");
    v.options.horizon = h;
  }
  v.simulate = o.boolean("simulate", v.simulate);
  v.options.simulation_points = static_cast<std::size_t>(o.count("simulation_points", v.options.simulation_points));
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("invalid JSON: ") + e.what(), "E_JSON_PARSE");
  }
  Object o(j, "", {"name", "description", "alpha", "components", "spare", "structure", "allocation", "grid", "quadrature",
                   "mc", "order", "verify", "counterexample"});
  if (o.has("description") && !o.required("description").is_string())
    fail("description", "expected a string", "E_TYPE");

  const double alpha = o.number("alpha");
  guarded("alpha", [&] { return check_share(alpha); });

  Scenario s{Instance{o.string("name", "scenario"), {}, component(o.required("spare"), "spare"), alpha},
             Structure::Series, std::nullopt, GridSpec{}, QuadratureConfig{}, SimConfig{}, OrderOptions{},
             VerifySettings{}, CounterexampleSettings{}};
  const json& comps = o.array("components");
  if (comps.empty()) fail("components", "at least one component is required", "E_COMPONENTS");
  for (std::size_t i = 0; i < comps.size(); ++i)
    s.instance.components.push_back(component(comps[i], "components[" + std::to_string(i) + "]"));
  const std::size_t n = s.instance.components.size();

  const std::string structure = o.string("structure", "series");
  if (structure == "parallel")
    s.structure = Structure::Parallel;
  else if (structure != "series")
    fail("structure", "structure must be \"series\" or \"parallel\"", "E_UNKNOWN_KIND");
  if (o.has("allocation")) s.allocation = index(o, "allocation", 1, n);
  if (o.has("grid")) s.grid = grid(o.required("grid"), "grid");
  if (o.has("quadrature")) quadrature(o.required("quadrature"), "quadrature", s.quadrature);
  if (o.has("mc")) mc(o.required("mc"), "mc", s.mc);
  if (o.has("order")) {
    if (n < 2) fail("order", "order comparisons need two components", "E_COMPONENTS");
    order(o.required("order"), "order", n, s.order);
  }
  if (o.has("verify")) verify(o.required("verify"), "verify", s.verify);
  s.verify.options.quadrature = s.quadrature;
  if (s.verify.simulate) s.verify.options.simulation = s.mc;
  if (o.has("counterexample")) {
    Object c(o.required("counterexample"), "counterexample", {"id"});
    const std::string id = c.string("id");
    s.counterexample.id = parse_counterexample(id);
    if (!s.counterexample.id) fail("counterexample.id", "unknown counterexample \"" + id + "\"", "E_UNKNOWN_KIND");
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Config, "cannot read config file " + path, "E_CONFIG_IO");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

LifetimeDistribution parse_distribution(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("distribution", std::string("invalid JSON: ") + e.what(), "E_JSON_PARSE");
  }
  return distribution(j, "distribution");
}

}  // namespace lshare
