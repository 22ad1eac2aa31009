#include "spherekit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spherekit/errors.hpp"
#include "spherekit/orthopoly.hpp"
#include "spherekit/parallel.hpp"
#include "spherekit/sampling.hpp"

namespace spherekit {

std::string to_string(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

BoundSide parse_side(const std::string& text) {
  if (text == "lower") return BoundSide::lower;
  if (text == "upper") return BoundSide::upper;
  throw InvalidArgument("bound side must be 'lower' or 'upper', got '" + text + "'");
}

DensePoly hermite_interpolant(const PotentialFunction& f, const std::vector<HermiteNode>& nodes) {
  if (nodes.empty()) throw InvalidArgument("hermite_interpolant: no nodes");
  auto not_finite = [&](const char* what, double z) {
    std::ostringstream os;
    os.precision(17);
    os << "hermite_interpolant: " << what << f.name() << " is not finite at node " << z;
    return DomainError(os.str());
  };
  struct Knot {
    double z;
    double value;
    double slope;
  };
  std::vector<Knot> knots;
  for (const HermiteNode& node : nodes) {
    const double v = f.value(node.z);
    if (!std::isfinite(v)) throw not_finite("", node.z);
    knots.push_back({node.z, v, 0.0});
    if (node.slope) {
      const double d = f.deriv(1, node.z);
      if (!std::isfinite(d)) throw not_finite("derivative of ", node.z);
      knots.back().slope = d;
      knots.push_back({node.z, v, d});
    }
  }

  // Divided-difference table, computed in place column by column; coef[k]
  // ends up as f[z_0, ..., z_k].
  const std::size_t count = knots.size();
  std::vector<double> column(count);
  std::vector<double> coef(count);
  for (std::size_t i = 0; i < count; ++i) column[i] = knots[i].value;
  coef[0] = column[0];
  for (std::size_t order = 1; order < count; ++order) {
    for (std::size_t i = 0; i + order < count; ++i) {
      const double dz = knots[i + order].z - knots[i].z;
      if (dz == 0.0 && order > 1) throw InvalidArgument("hermite_interpolant: repeated node");
      column[i] = dz == 0.0 ? knots[i].slope : (column[i + 1] - column[i]) / dz;
    }
    coef[order] = column[0];
  }

  DensePoly p = DensePoly::constant(coef[count - 1]);
  for (std::size_t k = count - 1; k-- > 0;) {
    p = p * DensePoly{-knots[k].z, 1.0};
    p += DensePoly::constant(coef[k]);
  }
  return p;
}

DensePoly hermite_interpolant(const PotentialFunction& f, const QuadratureRule& rule) {
  std::vector<HermiteNode> nodes;
  const std::size_t last = rule.nodes.size() - 1;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const bool endpoint = (j == 0 && rule.nu == 1) || (j == last && rule.mu == 1);
    nodes.push_back({rule.nodes[j], !endpoint});
  }
  return hermite_interpolant(f, nodes);
}

int required_derivative_order(BoundSide side, int m, int nu) {
  return side == BoundSide::lower ? 2 * m + nu : 2 * m + 1 + nu;
}

int required_strength(BoundSide side, int m, int nu) {
  return side == BoundSide::lower ? 2 * m - 1 + nu : 2 * m + nu;
}

std::pair<int, int> bound_parameters(int strength, BoundSide side) {
  const int shift = side == BoundSide::lower ? 1 : 0;
  if (strength + shift < 2) return {0, 0};
  return {(strength + shift) / 2, (strength + shift) % 2};
}

UniversalBound universal_bound(int n, int m, int nu, BoundSide side, const PotentialFunction& f,
                               bool force) {
  if (nu != 0 && nu != 1) throw InvalidArgument("universal_bound: nu must be 0 or 1");
  UniversalBound out;
  out.side = side;
  const int mu = side == BoundSide::lower ? 0 : 1;
  out.rule = build_rule(n, m, mu, nu);

  const int order = required_derivative_order(side, m, nu);
  out.sign = derivative_sign_check(f, order);
  out.certified = out.sign.status != SignStatus::violated;
  if (!out.certified && !force) {
    std::ostringstream os;
    os.precision(6);
    os << "derivative of order " << order << " of " << f.name() << " is negative (" << out.sign.min_value
       << " at t = " << out.sign.witness << "); the " << to_string(side)
       << " bound is not certified (use force to compute it anyway)";
    throw HypothesisError(os.str());
  }

  double sum = 0.0;
  for (std::size_t j = 0; j < out.rule.nodes.size(); ++j) {
    const double v = f.value(out.rule.nodes[j]);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "universal_bound: " << f.name() << " is not finite at node " << out.rule.nodes[j];
      throw DomainError(os.str());
    }
    sum += out.rule.weights[j] * v;
  }
  out.value = sum;

  const DensePoly q = hermite_interpolant(f, out.rule);
  double quad = 0.0;
  for (std::size_t j = 0; j < out.rule.nodes.size(); ++j) quad += out.rule.weights[j] * q(out.rule.nodes[j]);
  const std::vector<double> moments = weight_moments(n, std::max(q.degree(), 0));
  out.identity_residual = std::abs(quad - integrate_with_moments(q, moments));
  return out;
}

double potential(const Point& x, const WeightedCode& code, const PotentialFunction& f) {
  if (x.size() != code.dim()) throw InvalidArgument("potential: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const double v = f.value(std::clamp(x.dot(code.point(i)), -1.0, 1.0));
    if (std::isinf(v)) return v > 0 ? kInfinity : -kInfinity;
    sum += code.weight(i) * v;
  }
  return sum;
}

BoundReport attainment_report(const WeightedCode& code, int m, int nu, BoundSide side,
                              const PotentialFunction& f, const std::vector<Point>& candidates,
                              const AttainmentOptions& options) {
  const int needed = required_strength(side, m, nu);
  const StrengthResult sr = design_strength(code, std::max(needed, 1), options.design_tol);
  if (sr.strength < needed)
    throw PreconditionError("the " + to_string(side) + " bound with m = " + std::to_string(m) +
                            ", nu = " + std::to_string(nu) + " needs a " + std::to_string(needed) +
                            "-design; the code is certified only to strength " +
                            std::to_string(sr.strength));

  BoundReport report;
  report.bound = universal_bound(code.dim(), m, nu, side, f, options.force);
  report.samples = options.samples;
  const double bound = report.bound.value;
  const double sign = side == BoundSide::lower ? 1.0 : -1.0;

  std::vector<Point> points;
  for (const Point& c : candidates) {
    if (c.size() != code.dim()) throw InvalidArgument("attainment_report: candidate dimension mismatch");
    points.push_back(normalized(c));
  }
  const std::size_t n_candidates = points.size();
  for (Point& s : sphere_samples(code.dim(), options.samples)) points.push_back(std::move(s));

  std::vector<double> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) { values[i] = potential(points[i], code, f); });

  report.min_value = kInfinity;
  report.max_value = -kInfinity;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double v = values[i];
    const double gap = v - bound;
    if (i < n_candidates) report.candidates.push_back({points[i], v, std::isfinite(v) ? gap : kInfinity});
    if (!std::isfinite(v)) {
      ++report.skipped_infinite;
      continue;
    }
    report.min_value = std::min(report.min_value, v);
    report.max_value = std::max(report.max_value, v);
    if (sign * gap < -1e-9) report.respected = false;
    if (std::abs(gap) > options.attain_tol) continue;

    AttainingPoint a;
    a.point = points[i];
    a.from_candidates = i < n_candidates;
    a.value = v;
    a.gap = gap;
    a.spectrum = dot_spectrum(code, points[i], options.cluster_tol);
    const QuadratureRule& rule = report.bound.rule;
    if (a.spectrum.size() == rule.nodes.size()) {
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        a.node_error = std::max(a.node_error, std::abs(a.spectrum.values[j] - rule.nodes[j]));
        a.mass_error = std::max(a.mass_error, std::abs(a.spectrum.masses[j] - rule.weights[j]));
      }
      a.matches_rule = a.node_error <= 1e-8 && a.mass_error <= 1e-8;
    } else {
      a.node_error = a.mass_error = kInfinity;
    }
    report.attaining.push_back(std::move(a));
  }
  if (report.min_value > report.max_value) report.min_value = report.max_value = std::nan("");
  return report;
}

std::vector<CurvePoint> potential_curve(const WeightedCode& code, const PotentialFunction& f,
                                        const Point& start, const Point& direction, int steps,
                                        double bound) {
  if (steps < 1) throw InvalidArgument("potential_curve: steps must be >= 1");
  const Point a = normalized(start);
  Point b = direction - direction.dot(a) * a;
  if (b.norm() < 1e-9) throw InvalidArgument("potential_curve: direction is parallel to the start point");
  b = normalized(b);
  std::vector<CurvePoint> out;
  for (int k = 0; k <= steps; ++k) {
    const double s = std::numbers::pi * k / steps;
    const Point x = normalized(std::cos(s) * a + std::sin(s) * b);
    out.push_back({s, potential(x, code, f), bound});
  }
  return out;
}

}  // namespace spherekit
