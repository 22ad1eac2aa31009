#include "spherekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spherekit/bounds.hpp"
#include "spherekit/catalog.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/energy.hpp"
#include "spherekit/errors.hpp"
#include "spherekit/quadrature.hpp"
#include "spherekit/report.hpp"

namespace spherekit::cli {
namespace {

const char* kUncertified = "*** UNCERTIFIED: derivative hypothesis violated; value computed under --force ***";

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void emit(std::ostream& out, const std::string& format, const Json& value) {
  if (format == "table")
    out << table(value);
  else
    out << dump(value);
}

PotentialFunction potential_from(const std::string& family, const std::string& params) {
  if (params.empty()) return potentials::parse(family);
  if (family.find(':') != std::string::npos) return potentials::parse(family + "," + params);
  return potentials::parse(family + ":" + params);
}

WeightedCode reference_from(const std::string& ref) {
  if (std::filesystem::exists(ref)) return read_code(ref);
  const auto [name, params] = catalog::parse_spec(ref);
  return catalog::make(name, params);
}

Point first_axis_off(const Point& start) {
  for (Eigen::Index j = 0; j < start.size(); ++j)
    if (std::abs(start[j]) < 0.9) return Point::Unit(start.size(), j);
  return Point::Unit(start.size(), 0);
}

struct Options {
  std::string format = "json";

  // quad
  int n = 3, m = 1, mu = 0, nu = 0;

  // shared code input
  std::string code_path;

  // certify
  std::string candidates_path;
  double tol = 1e-9;
  double cluster_tol = 1e-7;

  // bound
  std::string side;
  std::string family;
  std::string params;
  std::optional<int> bound_m;
  std::optional<int> bound_nu;
  int samples = 1000;
  int curve_steps = 180;
  bool force = false;

  // energy / frame-bound
  std::optional<double> p;
  std::string ref;
  std::string nodes;
  std::string mode = "general";

  // catalog
  std::string catalog_name;
  std::optional<int> cat_n;
  std::optional<int> cat_count;
  std::optional<int> cat_parity;
  std::optional<double> cat_w0;
  std::optional<double> cat_w1;
};

int cmd_quad(const Options& o, std::ostream& out) {
  const QuadratureRule rule = build_rule(o.n, o.m, o.mu, o.nu);
  if (o.format == "csv") {
    out << "node,weight\n";
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      out << csv_number(rule.nodes[j]) << "," << csv_number(rule.weights[j]) << "\n";
    return ok;
  }
  emit(out, o.format, to_json(rule));
  return ok;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const WeightedCode code = read_code(o.code_path);
  std::vector<Point> candidates = default_candidates(code);
  if (!o.candidates_path.empty()) {
    std::ifstream in(o.candidates_path);
    if (!in) throw IoError("cannot open '" + o.candidates_path + "'");
    Json value;
    try {
      value = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ParseError("'" + o.candidates_path + "' is not valid JSON: " + e.what());
    }
    candidates = points_from_json(value, code.dim());
  }
  ClassifyOptions opts;
  opts.tol = o.tol;
  opts.cluster_tol = o.cluster_tol;
  emit(out, o.format, to_json(classify(code, candidates, opts)));
  return ok;
}

int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
  const WeightedCode code = read_code(o.code_path);
  const BoundSide side = parse_side(o.side);
  const PotentialFunction f = potential_from(o.family, o.params);
  int m = 0, nu = 0;
  if (o.bound_m) {
    m = *o.bound_m;
    nu = o.bound_nu.value_or(0);
  } else {
    const int strength = design_strength(code, 20).strength;
    std::tie(m, nu) = bound_parameters(strength, side);
    if (o.bound_nu) nu = *o.bound_nu;
    if (m < 1)
      throw PreconditionError("code is certified only to strength " + std::to_string(strength) +
                              ", too low for a " + to_string(side) + " bound");
  }
  AttainmentOptions opts;
  opts.samples = o.samples;
  opts.force = o.force;
  const BoundReport report = attainment_report(code, m, nu, side, f, default_candidates(code), opts);
  if (!report.bound.certified) err << kUncertified << "\n";

  if (o.format == "csv") {
    const Point start = report.attaining.empty() ? code.point(0) : report.attaining.front().point;
    if (!report.bound.certified) out << "# " << kUncertified << "\n";
    out << "param,potential_or_energy,bound\n";
    for (const CurvePoint& c : potential_curve(code, f, start, first_axis_off(start), o.curve_steps,
                                               report.bound.value))
      out << csv_number(c.param) << "," << csv_number(c.value) << "," << csv_number(c.bound) << "\n";
    return ok;
  }
  Json j = to_json(report);
  j["potential"] = f.name();
  if (o.format == "table" && !report.bound.certified) out << kUncertified << "\n";
  emit(out, o.format, j);
  return ok;
}

int cmd_energy(const Options& o, std::ostream& out) {
  const WeightedCode code = read_code(o.code_path);
  if (o.p.has_value() == !o.family.empty())
    throw InvalidArgument("energy: give exactly one of --f and --p");
  const PotentialFunction f = o.p ? potentials::power(*o.p / 2.0) : potential_from(o.family, o.params);
  const double e = o.p ? p_frame_energy(code, *o.p) : energy(code, f);
  if (o.format == "csv") {
    out << "param,potential_or_energy,bound\n";
    out << csv_number(o.p.value_or(0.0)) << "," << csv_number(e) << ",\n";
    return ok;
  }
  Json j = {{"energy", number(e)}, {"f", f.name()}, {"theta", number(theta(code))}};
  if (o.p) j["p"] = number(*o.p);
  emit(out, o.format, j);
  return ok;
}

int cmd_frame_bound(const Options& o, std::ostream& out, std::ostream& err) {
  const WeightedCode code = read_code(o.code_path);
  const WeightedCode reference = reference_from(o.ref);
  if (reference.dim() != code.dim())
    throw InvalidArgument("frame-bound: reference dimension " + std::to_string(reference.dim()) +
                          " differs from code dimension " + std::to_string(code.dim()));
  const SymmetricNodeSet nodes = SymmetricNodeSet::parse(o.nodes);
  if (o.p && !o.family.empty()) throw InvalidArgument("frame-bound: give at most one of --f and --p");
  const PotentialFunction f = !o.family.empty() ? potential_from(o.family, o.params)
                                                 : potentials::power(o.p.value_or(2.0) / 2.0);
  const EnergyBoundReport report = genframe_bound(reference, nodes, f, o.force);
  if (!report.certified) err << kUncertified << "\n";

  const double e = energy(code, potentials::restricted(f, 0.0, 1.0));
  const double th = theta(code);
  const bool applies = th >= report.theta_star - 1e-12;
  Json j = to_json(report);
  j["f"] = f.name();
  j["code"] = {{"energy", number(e)},
               {"theta", number(th)},
               {"bound_applies", applies},
               {"gap", number(e - report.bound)},
               {"equality", to_json(check_equality_conditions(code, report, nodes, parse_mode(o.mode)))},
               {"mode", o.mode}};
  if (applies && e < report.bound - 1e-9)
    throw InconsistencyError("code energy " + csv_number(e) + " is below the bound " + csv_number(report.bound));
  if (o.format == "table" && !report.certified) out << kUncertified << "\n";
  emit(out, o.format, j);
  return ok;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  Json list = Json::array();
  for (const catalog::Entry& e : catalog::entries())
    list.push_back({{"name", e.name}, {"summary", e.summary}, {"params", e.params}});
  if (o.format == "table") {
    std::size_t width = 0;
    for (const catalog::Entry& e : catalog::entries()) width = std::max(width, e.name.size());
    for (const catalog::Entry& e : catalog::entries())
      out << e.name << std::string(width - e.name.size() + 2, ' ') << e.summary << "\n";
    return ok;
  }
  out << dump(list);
  return ok;
}

int cmd_catalog_emit(const Options& o, std::ostream& out) {
  auto [name, params] = catalog::parse_spec(o.catalog_name);
  if (o.cat_n) params.n = *o.cat_n;
  if (o.cat_count) params.count = *o.cat_count;
  if (o.cat_parity) params.parity = *o.cat_parity;
  if (o.cat_w0) params.w0 = *o.cat_w0;
  if (o.cat_w1) params.w1 = *o.cat_w1;
  out << dump(to_json(catalog::make(name, params)));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted spherical designs: quadratures, certificates, potential and energy bounds",
               "spherekit"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"json", "table", "csv"};
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* quad = app.add_subcommand("quad", "Print the quadrature rule for (n, m, mu, nu)");
  quad->add_option("n", o.n, "Sphere dimension (S^{n-1} in R^n)")->required();
  quad->add_option("m", o.m, "Number of interior nodes")->required();
  quad->add_option("mu", o.mu, "1 to include the endpoint t = 1")->required()->check(CLI::Range(0, 1));
  quad->add_option("nu", o.nu, "1 to include the endpoint t = -1")->required()->check(CLI::Range(0, 1));
  add_format(quad, formats);

  CLI::App* certify = app.add_subcommand("certify", "Certify design strength and class of a code");
  certify->add_option("code", o.code_path, "Code JSON file")->required();
  certify->add_option("--candidates", o.candidates_path, "JSON list of candidate points");
  certify->add_option("--tol", o.tol, "Gegenbauer-sum tolerance")->check(CLI::PositiveNumber);
  certify->add_option("--cluster-tol", o.cluster_tol, "Dot-product clustering tolerance")
      ->check(CLI::PositiveNumber);
  add_format(certify, {"json", "table"});

  CLI::App* bound = app.add_subcommand("bound", "Universal lower or upper bound on the potential");
  bound->add_option("side", o.side, "lower or upper")->required()->check(CLI::IsMember({"lower", "upper"}));
  bound->add_option("code", o.code_path, "Code JSON file")->required();
  bound->add_option("--f", o.family, "Potential, e.g. exp, riesz:a=2.4,s=1, shifted_power:p=6")->required();
  bound->add_option("--params", o.params, "Extra key=value parameters for --f");
  bound->add_option("--m", o.bound_m, "Rule size (default: from certified strength)")
      ->check(CLI::PositiveNumber);
  bound->add_option("--nu", o.bound_nu, "0 or 1")->check(CLI::Range(0, 1));
  bound->add_option("--samples", o.samples, "Quasi-random sphere samples")->check(CLI::NonNegativeNumber);
  bound->add_option("--steps", o.curve_steps, "Points on the CSV curve")->check(CLI::PositiveNumber);
  bound->add_flag("--force", o.force, "Compute even if the derivative check fails");
  add_format(bound, formats);

  CLI::App* en = app.add_subcommand("energy", "f-energy or p-frame energy of a code");
  en->add_option("code", o.code_path, "Code JSON file")->required();
  auto* en_f = en->add_option("--f", o.family, "Squared potential on [0,1], e.g. power:s=1.5");
  en->add_option("--params", o.params, "Extra key=value parameters for --f");
  auto* en_p = en->add_option("--p", o.p, "Frame exponent p > 0")->check(CLI::PositiveNumber);
  en_f->excludes(en_p);
  add_format(en, formats);

  CLI::App* frame = app.add_subcommand("frame-bound", "Constrained-energy lower bound from a reference code");
  frame->add_option("code", o.code_path, "Code JSON file to compare against the bound")->required();
  frame->add_option("--ref", o.ref, "Reference: catalog spec (simplex:n=3) or code file")->required();
  frame->add_option("--A", o.nodes, "Comma-separated symmetric node set, e.g. -0.5,0,0.5")->required();
  auto* fr_f = frame->add_option("--f", o.family, "Squared potential on [0,1] (default power:s=1)");
  frame->add_option("--params", o.params, "Extra key=value parameters for --f");
  auto* fr_p = frame->add_option("--p", o.p, "Frame exponent p > 0")->check(CLI::PositiveNumber);
  fr_f->excludes(fr_p);
  frame->add_option("--mode", o.mode, "Equality diagnostics")
      ->check(CLI::IsMember({"general", "antipodal", "plain"}));
  frame->add_flag("--force", o.force, "Compute even if the derivative check fails");
  add_format(frame, {"json", "table"});

  CLI::App* cat = app.add_subcommand("catalog", "Named configurations");
  cat->require_subcommand(1);
  CLI::App* list = cat->add_subcommand("list", "List catalog entries");
  add_format(list, {"json", "table"});
  CLI::App* emit_cmd = cat->add_subcommand("emit", "Write a catalog code as JSON");
  emit_cmd->add_option("name", o.catalog_name, "Entry name, optionally name:key=value,...")->required();
  emit_cmd->add_option("--n", o.cat_n, "Dimension");
  emit_cmd->add_option("--N", o.cat_count, "Polygon size");
  emit_cmd->add_option("--parity", o.cat_parity, "Demihypercube parity");
  emit_cmd->add_option("--w0", o.cat_w0, "Cube: even demicube weight per point");
  emit_cmd->add_option("--w1", o.cat_w1, "Cube: odd demicube weight per point");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'spherekit --help' for usage\n";
    return usage;
  }

  try {
    if (quad->parsed()) return cmd_quad(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (bound->parsed()) return cmd_bound(o, out, err);
    if (en->parsed()) return cmd_energy(o, out);
    if (frame->parsed()) return cmd_frame_bound(o, out, err);
    if (list->parsed()) return cmd_catalog_list(o, out);
    if (emit_cmd->parsed()) return cmd_catalog_emit(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_or_parse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return io_or_parse;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return hypothesis;
  } catch (const PreconditionError& e) {
    err << "precondition not met: " << e.what() << "\n";
    return hypothesis;
  } catch (const DomainError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return hypothesis;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UnsupportedParameters& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
  err << "error: no command given\n";
  return usage;
}

}  // namespace spherekit::cli
