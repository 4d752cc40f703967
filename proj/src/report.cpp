#include "lshare/report.hpp"

#include <cmath>
#include <cstdio>

namespace lshare {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += '\n';
  }
  return out;
}

namespace {

void dump(const ordered_json& v, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ordered_json(key).dump() + ": ";
        dump(item, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(v[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_number(d) : "\"" + format_number(d) + "\"";
      return;
    }
    default: out += v.dump(); return;
  }
}

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json number_array(std::span<const double> xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(x);
  return a;
}

}  // namespace

std::string to_json(const ordered_json& value) {
  std::string out;
  dump(value, out, 0);
  out += '\n';
  return out;
}

ordered_json to_json_value(const Witness& w) {
  ordered_json j;
  j["at"] = w.at;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["from"] = optional_number(w.from);
  return j;
}

ordered_json to_json_value(const ConditionVerdict& v) {
  ordered_json j;
  j["name"] = v.name;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? to_json_value(*v.witness) : ordered_json(nullptr);
  return j;
}

ordered_json to_json_value(const OrderVerdict& v) {
  ordered_json j;
  j["relation"] = to_string(v.relation);
  j["direction"] = to_string(v.direction);
  j["holds"] = v.holds;
  j["witness"] = v.witness ? to_json_value(*v.witness) : ordered_json(nullptr);
  j["grid"] = {{"points", v.grid_points}, {"min", v.grid_min}, {"max", v.grid_max}, {"spacing", "log"}};
  return j;
}

ordered_json to_json_value(const QuadratureConfig& q) {
  return {{"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol}, {"max_subdivisions", q.max_subdivisions}};
}

ordered_json to_json_value(const AllocationReport& r) {
  ordered_json j;
  j["structure"] = to_string(r.structure);
  j["tolerance"] = r.tolerance;
  j["best"] = r.best ? ordered_json(*r.best) : ordered_json(nullptr);
  ordered_json cmp = ordered_json::array();
  const auto gap = [](const std::optional<GapPoint>& g) {
    if (!g) return ordered_json(nullptr);
    return ordered_json{{"t", g->t}, {"first", g->first}, {"second", g->second}};
  };
  for (const auto& c : r.comparisons) {
    ordered_json e;
    e["first"] = c.first;
    e["second"] = c.second;
    e["relation"] = to_string(c.relation);
    e["first_below"] = gap(c.first_below);
    e["second_below"] = gap(c.second_below);
    e["sign_change"] = optional_number(c.sign_change);
    cmp.push_back(std::move(e));
  }
  j["comparisons"] = std::move(cmp);
  j["grid"] = number_array(r.grid);
  ordered_json curves = ordered_json::array();
  for (std::size_t i = 0; i < r.curves.size(); ++i)
    curves.push_back({{"allocation", i + 1}, {"reliability", number_array(r.curves[i])}});
  j["curves"] = std::move(curves);
  return j;
}

ordered_json to_json_value(const TheoremReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["instance"] = r.instance;
  j["description"] = r.description;
  j["structure"] = r.pair_only ? "pair" : to_string(r.structure);
  ordered_json hyps = ordered_json::array();
  for (const auto& h : r.hypotheses) {
    ordered_json e = to_json_value(h.verdict);
    e["group"] = h.group;
    e["role"] = to_string(h.role);
    hyps.push_back(std::move(e));
  }
  j["hypotheses"] = std::move(hyps);
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["satisfied_alternative"] = r.satisfied_alternative ? ordered_json(*r.satisfied_alternative) : ordered_json(nullptr);
  ordered_json concl = ordered_json::array();
  for (const auto& c : r.conclusions) {
    ordered_json e = to_json_value(c.verdict);
    e["first"] = c.first;
    e["second"] = c.second;
    e["min_gap"] = c.min_gap;
    e["min_gap_at"] = c.min_gap_at;
    concl.push_back(std::move(e));
  }
  j["conclusions"] = std::move(concl);
  j["conclusion_holds"] = r.conclusion_holds;
  j["grid"] = {{"start", r.grid_start}, {"stop", r.grid_stop}, {"points", r.grid_points}, {"spacing", "linear"}};
  j["slack"] = r.slack;
  j["quadrature"] = to_json_value(r.quadrature);
  if (!r.simulation.empty()) {
    ordered_json sim = ordered_json::array();
    for (const auto& s : r.simulation)
      sim.push_back({{"allocation", s.allocation},
                     {"points", s.points},
                     {"within_3se", s.within_3se},
                     {"max_abs_z", s.max_abs_z}});
    j["simulation"] = std::move(sim);
  }
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"difference", to_string(w.difference)},
                    {"interval", {w.interval_lo, w.interval_hi}},
                    {"resolution", w.resolution},
                    {"t", w.t},
                    {"value", w.value}};
  }
  if (r.pattern_matches) j["pattern_matches"] = *r.pattern_matches;
  return j;
}

CsvTable curves_table(std::span<const double> grid, const std::vector<std::vector<double>>& curves,
                      const std::vector<std::string>& names) {
  CsvTable t;
  t.header.push_back("t");
  t.header.insert(t.header.end(), names.begin(), names.end());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> row{grid[k]};
    for (const auto& c : curves) row.push_back(c[k]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable estimate_table(const SurvivalEstimate& e) {
  CsvTable t{{"t", "estimate", "stderr"}, {}};
  for (std::size_t k = 0; k < e.grid.size(); ++k) t.rows.push_back({e.grid[k], e.estimate[k], e.standard_error[k]});
  return t;
}

}  // namespace lshare
