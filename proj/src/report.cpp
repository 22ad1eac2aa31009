#include "spherekit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spherekit/errors.hpp"

namespace spherekit {
namespace {

std::string format_double(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s = buf;
  // Keep floats recognizable as floats.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_into(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump_into(it.value(), indent + 2, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump_into(v[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(v[i], indent + 2, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>(), 17);
      return;
    default:
      out += v.dump();
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>(), 12);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), rows);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      std::string line;
      for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "  " : "") + scalar_text(v[i]);
      rows.emplace_back(key, line);
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(key, scalar_text(v));
}

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError("code file: " + what); }

}  // namespace

std::string dump(const Json& value) {
  std::string out;
  dump_into(value, 0, out);
  out += "\n";
  return out;
}

std::string table(const Json& value) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(value, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

Json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x, 17);
}

Json to_json(const Point& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(number(p[i]));
  return a;
}

Json to_json(const WeightedCode& code) {
  Json pts = Json::array();
  for (const Point& p : code.points()) pts.push_back(to_json(p));
  Json w = Json::array();
  for (double x : code.weights()) w.push_back(number(x));
  return {{"dim", code.dim()}, {"points", pts}, {"weights", w}};
}

Json to_json(const QuadratureRule& rule) {
  Json nodes = Json::array(), weights = Json::array();
  for (double x : rule.nodes) nodes.push_back(number(x));
  for (double x : rule.weights) weights.push_back(number(x));
  return {{"n", rule.n}, {"m", rule.m},       {"mu", rule.mu},          {"nu", rule.nu},
          {"nodes", nodes}, {"weights", weights}, {"L", rule.exactness_degree}};
}

Json to_json(const DotSpectrum& spectrum) {
  Json values = Json::array(), masses = Json::array();
  for (double x : spectrum.values) values.push_back(number(x));
  for (double x : spectrum.masses) masses.push_back(number(x));
  return {{"values", values}, {"masses", masses}};
}

Json to_json(const DesignCertificate& cert) {
  Json residuals = Json::array();
  for (double r : cert.residuals) residuals.push_back(number(r));
  Json points = Json::array();
  for (const Point& p : cert.extremal_points) points.push_back(to_json(p));
  Json witnesses = Json::array();
  for (const ExtremalWitness& w : cert.witnesses)
    witnesses.push_back({{"class", to_string(w.cls)},
                         {"m", w.m},
                         {"mu", w.mu},
                         {"nu", w.nu},
                         {"point", to_json(w.point)},
                         {"spectrum", to_json(w.spectrum)},
                         {"node_error", number(w.node_error)},
                         {"mass_error", number(w.mass_error)}});
  return {{"strength", cert.strength},
          {"kk_strength", cert.kk_strength},
          {"class", to_string(cert.cls)},
          {"class_m", cert.class_m},
          {"class_degree", cert.class_degree},
          {"extremal_points", points},
          {"residuals", residuals},
          {"witnesses", witnesses}};
}

Json to_json(const UniversalBound& bound) {
  Json out = {{"side", to_string(bound.side)},
              {"n", bound.rule.n},
              {"m", bound.rule.m},
              {"mu", bound.rule.mu},
              {"nu", bound.rule.nu},
              {"bound", number(bound.value)},
              {"certified", bound.certified},
              {"derivative_check",
               {{"status", to_string(bound.sign.status)},
                {"min_value", number(bound.sign.min_value)},
                {"at", number(bound.sign.witness)}}},
              {"identity_residual", number(bound.identity_residual)}};
  Json nodes = Json::array(), weights = Json::array();
  for (double x : bound.rule.nodes) nodes.push_back(number(x));
  for (double x : bound.rule.weights) weights.push_back(number(x));
  out["nodes"] = nodes;
  out["weights"] = weights;
  if (!bound.certified) out["warning"] = "UNCERTIFIED: derivative hypothesis violated, value computed under --force";
  return out;
}

Json to_json(const BoundReport& report) {
  Json out = to_json(report.bound);
  Json candidates = Json::array();
  for (const CandidateValue& c : report.candidates)
    candidates.push_back({{"point", to_json(c.point)}, {"potential", number(c.value)}, {"gap", number(c.gap)}});
  Json attaining = Json::array();
  for (const AttainingPoint& a : report.attaining)
    attaining.push_back({{"point", to_json(a.point)},
                         {"source", a.from_candidates ? "candidate" : "sample"},
                         {"potential", number(a.value)},
                         {"gap", number(a.gap)},
                         {"spectrum", to_json(a.spectrum)},
                         {"matches_rule", a.matches_rule},
                         {"node_error", number(a.node_error)},
                         {"mass_error", number(a.mass_error)}});
  out["candidates"] = candidates;
  out["attaining_points"] = attaining;
  out["samples"] = report.samples;
  out["skipped_infinite"] = report.skipped_infinite;
  out["min_potential"] = number(report.min_value);
  out["max_potential"] = number(report.max_value);
  out["bound_respected"] = report.respected;
  return out;
}

Json to_json(const EnergyBoundReport& report) {
  Json d = Json::array(), beta = Json::array(), p = Json::array(), signs = Json::array();
  for (double x : report.d) d.push_back(number(x));
  for (double x : report.beta) beta.push_back(number(x));
  for (double x : report.p.coeffs()) p.push_back(number(x));
  for (std::size_t k = 0; k < report.sign_checks.size(); ++k)
    signs.push_back({{"order", k + 1},
                     {"status", to_string(report.sign_checks[k].status)},
                     {"min_value", number(report.sign_checks[k].min_value)}});
  Json out = {{"n", report.n},
              {"m", report.m},
              {"L", report.L},
              {"nu", report.nu},
              {"beta", beta},
              {"p_coeffs", p},
              {"d", d},
              {"theta_star", number(report.theta_star)},
              {"f_at_one", number(report.f_at_one)},
              {"p_at_one", number(report.p_at_one)},
              {"bound", number(report.bound)},
              {"gamma", number(report.gamma)},
              {"levenshtein_residual", number(report.levenshtein_residual)},
              {"energy_reference", number(report.energy_reference)},
              {"identity_residual", number(report.identity_residual)},
              {"certified", report.certified},
              {"derivative_checks", signs}};
  if (!report.certified) out["warning"] = "UNCERTIFIED: derivative hypothesis violated, value computed under --force";
  return out;
}

Json to_json(const EqualityFlags& flags) {
  Json out = {{"design", flags.design},
              {"off_a_mass", number(flags.off_a_mass)},
              {"off_a_zero", flags.off_a_zero},
              {"theta_match", flags.theta_match},
              {"all", flags.all()}};
  if (flags.pair_totals) out["pair_totals"] = *flags.pair_totals;
  if (flags.plain) out["plain"] = *flags.plain;
  return out;
}

std::vector<Point> points_from_json(const Json& value, int dim) {
  const Json* arr = &value;
  if (value.is_object()) {
    if (!value.contains("points")) parse_fail("missing \"points\"");
    arr = &value.at("points");
  }
  if (!arr->is_array()) parse_fail("\"points\" must be an array");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const Json& row = (*arr)[i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!row.is_array()) parse_fail(where + " must be an array");
    if (static_cast<int>(row.size()) != dim)
      parse_fail(where + " has " + std::to_string(row.size()) + " coordinates, expected " + std::to_string(dim));
    Point p(dim);
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number()) parse_fail(where + "[" + std::to_string(j) + "] is not a number");
      p[j] = row[j].get<double>();
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

WeightedCode code_from_json(const Json& value) {
  if (!value.is_object()) parse_fail("top level must be an object");
  if (!value.contains("dim")) parse_fail("missing \"dim\"");
  if (!value.at("dim").is_number_integer()) parse_fail("\"dim\" must be an integer");
  const int dim = value.at("dim").get<int>();
  if (dim < 2) parse_fail("\"dim\" must be >= 2");
  std::vector<Point> pts = points_from_json(value, dim);
  if (pts.empty()) parse_fail("\"points\" is empty");
  std::vector<double> weights;
  if (value.contains("weights")) {
    const Json& w = value.at("weights");
    if (!w.is_array()) parse_fail("\"weights\" must be an array");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number()) parse_fail("weights[" + std::to_string(i) + "] is not a number");
      weights.push_back(w[i].get<double>());
    }
  } else {
    weights.assign(pts.size(), 1.0 / static_cast<double>(pts.size()));
  }
  try {
    return WeightedCode(dim, std::move(pts), std::move(weights));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }
}

WeightedCode read_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json value;
  try {
    value = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return code_from_json(value);
}

void write_code(const std::string& path, const WeightedCode& code) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << dump(to_json(code));
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace spherekit
