#include "spherekit/designs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "spherekit/errors.hpp"
#include "spherekit/orthopoly.hpp"
#include "spherekit/quadrature.hpp"

namespace spherekit {

std::vector<double> gegenbauer_sums(const WeightedCode& code, int kmax) {
  if (kmax < 0) throw InvalidArgument("gegenbauer_sums: kmax must be >= 0");
  const FamilyEvaluator geg(PolyFamily::gegenbauer(code.dim()), kmax);
  const std::size_t n = code.size();
  std::vector<double> sums(static_cast<std::size_t>(kmax) + 1, 0.0);
  std::vector<double> vals(sums.size());
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag += code.weight(i) * code.weight(i);
  for (double& s : sums) s = diag;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = std::clamp(code.point(i).dot(code.point(j)), -1.0, 1.0);
      geg.eval_all(t, vals);
      const double ww = 2.0 * code.weight(i) * code.weight(j);
      for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += ww * vals[k];
    }
  }
  return sums;
}

StrengthResult design_strength(const WeightedCode& code, int max_m, double tol) {
  if (max_m < 0) throw InvalidArgument("design_strength: max_m must be >= 0");
  const std::vector<double> sums = gegenbauer_sums(code, max_m);
  StrengthResult out;
  bool broken = false;
  for (int k = 1; k <= max_m; ++k) {
    // Double sums are nonnegative by positive definiteness; negatives are rounding.
    const double r = std::max(sums[k], 0.0);
    out.residuals.push_back(r);
    if (!broken && r < tol)
      out.strength = k;
    else
      broken = true;
  }
  return out;
}

int kk_strength(const WeightedCode& code, int max_k, double tol) {
  if (max_k < 0) throw InvalidArgument("kk_strength: max_k must be >= 0");
  const std::vector<double> sums = gegenbauer_sums(code, 2 * max_k);
  int k = 0;
  while (k < max_k && std::max(sums[2 * (k + 1)], 0.0) < tol) ++k;
  return k;
}

DotSpectrum dot_spectrum(const WeightedCode& code, const Point& z, double cluster_tol,
                         bool exclude_self) {
  if (std::abs(z.norm() - 1.0) > 1e-12) throw InvalidArgument("dot_spectrum: z must be a unit vector");
  if (z.size() != code.dim()) throw InvalidArgument("dot_spectrum: dimension mismatch");
  std::vector<std::pair<double, double>> dots;
  dots.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    const double t = std::clamp(z.dot(code.point(i)), -1.0, 1.0);
    if (exclude_self && t >= 1.0 - cluster_tol) continue;
    dots.emplace_back(t, code.weight(i));
  }
  std::sort(dots.begin(), dots.end());
  DotSpectrum spec;
  std::size_t start = 0;
  while (start < dots.size()) {
    std::size_t end = start + 1;
    while (end < dots.size() && dots[end].first - dots[end - 1].first <= cluster_tol) ++end;
    double sum_t = 0.0, mass = 0.0;
    for (std::size_t q = start; q < end; ++q) {
      sum_t += dots[q].first;
      mass += dots[q].second;
    }
    spec.values.push_back(sum_t / static_cast<double>(end - start));
    spec.masses.push_back(mass);
    start = end;
  }
  return spec;
}

std::string to_string(DesignClass cls) {
  switch (cls) {
    case DesignClass::none:
      return "none";
    case DesignClass::stiff:
      return "m-stiff";
    case DesignClass::weakly_sharp_even:
      return "weakly-sharp-even";
    case DesignClass::weakly_sharp_odd:
      return "weakly-sharp-odd";
  }
  return "none";
}

std::vector<Point> default_candidates(const WeightedCode& code) {
  const int n = code.dim();
  std::vector<Point> raw;
  for (const Point& x : code.points()) {
    raw.push_back(x);
    raw.push_back(-x);
  }
  for (int j = 0; j < n; ++j) {
    Point e = Point::Zero(n);
    e[j] = 1.0;
    raw.push_back(e);
    raw.push_back(-e);
  }
  const Point diag = Point::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  raw.push_back(diag);
  raw.push_back(-diag);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const Point mid = code.point(i) + code.point(j);
      if (mid.norm() > 1e-9) raw.push_back(mid / mid.norm());
    }

  std::vector<Point> unique;
  for (Point& p : raw) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const Point& q) { return q.dot(p) >= 1.0 - 1e-12; });
    if (!seen) unique.push_back(std::move(p));
  }
  return unique;
}

namespace {

DesignClass class_of(int mu, int nu) {
  if (mu == 0 && nu == 0) return DesignClass::stiff;
  if (mu == 1 && nu == 1) return DesignClass::weakly_sharp_odd;
  return DesignClass::weakly_sharp_even;
}

int priority(DesignClass cls) {
  switch (cls) {
    case DesignClass::stiff:
      return 3;
    case DesignClass::weakly_sharp_even:
      return 2;
    case DesignClass::weakly_sharp_odd:
      return 1;
    case DesignClass::none:
      break;
  }
  return 0;
}

std::string point_text(const Point& p) {
  std::ostringstream os;
  os.precision(12);
  os << "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

}  // namespace

DesignCertificate classify(const WeightedCode& code, const std::vector<Point>& candidates,
                           const ClassifyOptions& options) {
  if (candidates.empty()) throw InvalidArgument("classify: candidate list is empty");
  DesignCertificate cert;
  const StrengthResult sr = design_strength(code, options.max_degree, options.tol);
  cert.strength = sr.strength;
  cert.residuals = sr.residuals;
  cert.kk_strength = kk_strength(code, options.max_degree / 2, options.tol);
  const int s = cert.strength;

  std::map<std::array<int, 3>, QuadratureRule> rules;
  auto rule_for = [&](int m, int mu, int nu) -> const QuadratureRule& {
    const std::array<int, 3> key{m, mu, nu};
    auto it = rules.find(key);
    if (it == rules.end()) it = rules.emplace(key, build_rule(code.dim(), m, mu, nu)).first;
    return it->second;
  };

  for (const Point& raw : candidates) {
    if (raw.size() != code.dim()) throw InvalidArgument("classify: candidate dimension mismatch");
    const Point z = normalized(raw);
    const DotSpectrum spec = dot_spectrum(code, z, options.cluster_tol, false);
    const bool in_c = code.find(z, options.member_tol) >= 0;
    const bool in_neg_c = code.find(-z, options.member_tol) >= 0;
    auto in_set = [&](int mu, int nu) { return (mu == 0 || in_c) && (nu == 0 || in_neg_c); };

    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b) {
        if (!in_set(a, b) || s < a + b) continue;
        const int mm = (s - a - b) / 2;
        const std::size_t needed = static_cast<std::size_t>(mm + 1 + a + b);
        if (spec.size() < needed)
          throw InconsistencyError("point " + point_text(z) + " forms " + std::to_string(spec.size()) +
                                   " distinct dot products with a certified " +
                                   std::to_string(2 * mm + a + b) + "-design; at least " +
                                   std::to_string(needed) +
                                   " are required (check strength tolerance or cluster_tol)");
      }

    for (int mu = 0; mu <= 1; ++mu)
      for (int nu = 0; nu <= 1; ++nu) {
        if (!in_set(mu, nu)) continue;
        const int m = static_cast<int>(spec.size()) - mu - nu;
        if (m < 1 || 2 * m - 1 + mu + nu > s) continue;
        const QuadratureRule& rule = rule_for(m, mu, nu);
        ExtremalWitness w{class_of(mu, nu), m, mu, nu, z, spec, 0.0, 0.0};
        for (std::size_t j = 0; j < spec.size(); ++j) {
          w.node_error = std::max(w.node_error, std::abs(spec.values[j] - rule.nodes[j]));
          w.mass_error = std::max(w.mass_error, std::abs(spec.masses[j] - rule.weights[j]));
        }
        if (w.node_error > options.match_tol || w.mass_error > options.match_tol)
          throw InconsistencyError("extremal candidate " + point_text(z) +
                                   " does not reproduce the quadrature nodes/weights (node error " +
                                   std::to_string(w.node_error) + ", mass error " +
                                   std::to_string(w.mass_error) + ")");
        cert.witnesses.push_back(std::move(w));
      }
  }

  const ExtremalWitness* best = nullptr;
  auto degree_of = [](const ExtremalWitness& w) { return 2 * w.m - 1 + w.mu + w.nu; };
  for (const ExtremalWitness& w : cert.witnesses) {
    if (!best || degree_of(w) > degree_of(*best) ||
        (degree_of(w) == degree_of(*best) && priority(w.cls) > priority(best->cls)))
      best = &w;
  }
  if (best) {
    cert.cls = best->cls;
    cert.class_m = best->m;
    cert.class_degree = degree_of(*best);
    for (const ExtremalWitness& w : cert.witnesses) {
      if (w.cls != cert.cls || w.m != cert.class_m) continue;
      // Weak sharpness is witnessed by points of C; the (0,1) witnesses are their antipodes.
      if (w.cls == DesignClass::weakly_sharp_even && w.mu == 0) continue;
      cert.extremal_points.push_back(w.point);
    }
  }
  return cert;
}

WeightedCode weighted_union(const WeightedCode& a, const WeightedCode& b, double alpha) {
  if (a.dim() != b.dim())
    throw InvalidArgument("weighted_union: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("weighted_union: alpha must lie in (0,1)");
  std::vector<Point> pts = a.points();
  std::vector<double> w;
  for (double x : a.weights()) w.push_back(alpha * x);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int hit = a.find(b.point(i), 1e-12);
    if (hit >= 0)
      w[static_cast<std::size_t>(hit)] += (1.0 - alpha) * b.weight(i);
    else {
      pts.push_back(b.point(i));
      w.push_back((1.0 - alpha) * b.weight(i));
    }
  }
  return WeightedCode(a.dim(), std::move(pts), std::move(w));
}

WeightedCode antipodal_double(const WeightedCode& code, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("antipodal_double: alpha must lie in (0,1)");
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (code.point(i).dot(code.point(j)) <= -1.0 + 1e-12)
        throw PreconditionError("antipodal_double: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " are already antipodal");
  std::vector<Point> pts;
  std::vector<double> w;
  for (std::size_t i = 0; i < code.size(); ++i) {
    pts.push_back(code.point(i));
    w.push_back(alpha * code.weight(i));
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    pts.push_back(-code.point(i));
    w.push_back((1.0 - alpha) * code.weight(i));
  }
  return WeightedCode(code.dim(), std::move(pts), std::move(w));
}

}  // namespace spherekit
