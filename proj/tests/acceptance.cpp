// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spherekit/bounds.hpp"
#include "spherekit/catalog.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/energy.hpp"
#include "spherekit/orthopoly.hpp"
#include "spherekit/quadrature.hpp"
#include "support.hpp"

using namespace spherekit;

namespace {

// Collects failed checks for one criterion.
struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++count;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(17);
    s << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
    expect(std::abs(got - want) <= tol, s.str());
  }
  int count = 0;
  int checks = 0;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

std::string str(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

void golden_rules(Checker& c) {
  const auto r = build_rule(3, 1, 1, 0);
  c.expect(r.nodes.size() == 2, "(1,0) rule has two nodes");
  if (r.nodes.size() != 2) return;
  c.near(r.nodes[0], -1.0 / 3, 1e-12, "(1,0) node 0");
  c.near(r.nodes[1], 1.0, 1e-12, "(1,0) node 1");
  c.near(r.weights[0], 0.75, 1e-12, "(1,0) weight 0");
  c.near(r.weights[1], 0.25, 1e-12, "(1,0) weight 1");

  const auto mirror = build_rule(3, 1, 0, 1);
  c.expect(mirror.nodes.size() == 2, "(0,1) rule has two nodes");
  if (mirror.nodes.size() != 2) return;
  c.near(mirror.nodes[0], -1.0, 1e-12, "(0,1) node 0");
  c.near(mirror.nodes[1], 1.0 / 3, 1e-12, "(0,1) node 1");
  c.near(mirror.weights[0], 0.25, 1e-12, "(0,1) weight 0");
  c.near(mirror.weights[1], 0.75, 1e-12, "(0,1) weight 1");
}

void exactness_sweep(Checker& c) {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= 10; ++m)
      for (int mu = 0; mu <= 1; ++mu)
        for (int nu = 0; nu <= 1; ++nu) {
          const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " mu=" +
                                  std::to_string(mu) + " nu=" + std::to_string(nu);
          const auto r = build_rule(n, m, mu, nu);
          c.expect(r.exactness_degree == 2 * m - 1 + mu + nu, tag + ": exactness degree");
          for (double w : r.weights) c.expect(w > 0.0, tag + ": positive weights");
          const double res = exactness_residual(r, r.exactness_degree);
          c.expect(res < 1e-9, tag + ": residual " + str(res));
        }
}

void square_pyramid(Checker& c) {
  const auto pyr = catalog::square_pyramid();
  const auto candidates = default_candidates(pyr);
  const auto cert = classify(pyr, candidates);
  c.expect(cert.strength == 2, "strength 2");
  c.expect(cert.cls == DesignClass::weakly_sharp_even, "class weakly-sharp-even, got " + to_string(cert.cls));

  const auto f = potentials::exponential();
  AttainmentOptions options;
  options.samples = 1000;
  const Point apex = Point::Unit(3, 2);

  const auto up = attainment_report(pyr, 1, 0, BoundSide::upper, f, candidates, options);
  c.near(up.bound.value, 0.25 * std::exp(1.0) + 0.75 * std::exp(-1.0 / 3), 1e-12, "upper bound");
  c.expect(up.samples == 1000, "1000 samples scanned");
  c.expect(up.respected, "upper bound respected by all samples");
  c.expect(up.attaining.size() == 1, "upper bound attained at exactly one point, got " +
                                         std::to_string(up.attaining.size()));
  for (const auto& a : up.attaining) {
    c.expect((a.point - apex).norm() < 1e-12, "upper bound attained at the apex");
    c.expect(a.gap <= 1e-8, "upper gap " + str(a.gap));
  }

  const auto lo = attainment_report(pyr, 1, 1, BoundSide::lower, f, candidates, options);
  c.near(lo.bound.value, 0.25 * std::exp(-1.0) + 0.75 * std::exp(1.0 / 3), 1e-12, "lower bound");
  c.expect(lo.respected, "lower bound respected by all samples");
  c.expect(lo.attaining.size() == 1, "lower bound attained at exactly one point, got " +
                                         std::to_string(lo.attaining.size()));
  for (const auto& a : lo.attaining) {
    c.expect((a.point + apex).norm() < 1e-12, "lower bound attained at the antipode of the apex");
    c.expect(a.gap <= 1e-8, "lower gap " + str(a.gap));
  }
}

void weighted_hypercube(Checker& c) {
  const auto f = potentials::exponential();
  for (int n = 4; n <= 6; ++n)
    for (double share : {0.5, 0.3, 0.85}) {
      const std::string tag = "n=" + std::to_string(n) + " share=" + str(share);
      const double total = std::ldexp(1.0, 1 - n);
      const auto cube = catalog::cube(n, share * total, (1.0 - share) * total);
      const auto candidates = default_candidates(cube);
      const auto cert = classify(cube, candidates);
      c.expect(cert.strength == 3, tag + ": strength 3, got " + std::to_string(cert.strength));
      c.expect(cert.cls == DesignClass::stiff && cert.class_m == 2, tag + ": 2-stiff");

      const auto rep = attainment_report(cube, 2, 0, BoundSide::lower, f, candidates);
      const double s = 1.0 / std::sqrt(static_cast<double>(n));
      c.near(rep.bound.value, 0.5 * (f(-s) + f(s)), 1e-12, tag + ": lower bound");
      c.expect(rep.respected, tag + ": bound respected");
      c.expect(rep.attaining.size() == static_cast<std::size_t>(2 * n),
               tag + ": 2n attaining points, got " + std::to_string(rep.attaining.size()));
      for (const auto& a : rep.attaining) {
        c.expect(std::abs(a.point.cwiseAbs().maxCoeff() - 1.0) < 1e-12, tag + ": attained at +-e_j");
        c.expect(a.spectrum.size() == 2, tag + ": two dot products");
        for (double mass : a.spectrum.masses) c.near(mass, 0.5, 1e-8, tag + ": spectrum mass");
        c.expect(a.gap <= 1e-8, tag + ": gap");
      }
    }
}

void simplex_energy(Checker& c) {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const auto simplex = catalog::simplex(n);
    const auto nodes = SymmetricNodeSet::from_alpha({-1.0 / n, 1.0 / n});
    const auto f = potentials::power(1.0);
    const auto rep = genframe_bound(simplex, nodes, f);
    c.near(rep.bound, 1.0 / n, 1e-12, tag + ": bound");
    c.near(energy(simplex, f), rep.bound, 1e-12, tag + ": simplex energy equals the bound");
    c.expect(check_equality_conditions(simplex, rep, nodes, EqualityMode::plain).all(),
             tag + ": simplex satisfies every equality condition");

    for (int trial = 0; trial < 200; ++trial) {
      const auto code = testing::random_code(rng, n, static_cast<std::size_t>(n + 1));
      const double e = p_frame_energy(code, 2.0);
      c.expect(e >= 1.0 / n - 1e-9, tag + ": random code energy " + str(e));
      const bool tight = std::abs(e - 1.0 / n) <= 1e-9;
      c.expect(tight == check_equality_conditions(code, rep, nodes, EqualityMode::plain).all(),
               tag + ": equality flags agree with the energy");
    }

    // Perturbations: moved points and skewed weights both lose equality.
    for (double eps : {1e-2, 1e-4}) {
      std::vector<Point> pts = simplex.points();
      pts[0] = normalized(pts[0] + eps * testing::random_unit(rng, n));
      const auto moved = WeightedCode::equal_weights(n, pts);
      const auto flags = check_equality_conditions(moved, rep, nodes, EqualityMode::plain);
      c.expect(!flags.off_a_zero && !flags.all(), tag + ": moved simplex flagged, eps=" + str(eps));
      c.expect(p_frame_energy(moved, 2.0) > 1.0 / n, tag + ": moved simplex energy above the bound");

      std::vector<double> w(static_cast<std::size_t>(n + 1), 1.0 / (n + 1));
      w[0] += eps;
      w[1] -= eps;
      const WeightedCode skewed(n, simplex.points(), w);
      const auto sflags = check_equality_conditions(skewed, rep, nodes, EqualityMode::plain);
      c.expect(!sflags.theta_match && !sflags.all(), tag + ": skewed simplex flagged, eps=" + str(eps));
    }
  }
}

void antipodal_energy(Checker& c) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const std::size_t pairs = 1 + static_cast<std::size_t>(trial / 2) % static_cast<std::size_t>(n);
    const auto code = testing::random_antipodal_code(rng, n, pairs);
    const std::string tag = "trial " + std::to_string(trial);
    for (double p : {1.0, 2.0, 3.0}) {
      const double e = p_frame_energy(code, p);
      c.expect(e >= 1.0 / static_cast<double>(pairs) - 1e-9, tag + ": p=" + str(p) + " energy " + str(e));
    }
    // Cross-polytope reference with A = {0}.
    const auto cross = catalog::cross_polytope(n);
    for (double p : {2.0, 3.0}) {
      const auto rep = genframe_bound(cross, SymmetricNodeSet::from_alpha({0.0}), potentials::power(p / 2));
      if (theta(code) >= rep.theta_star)
        c.expect(p_frame_energy(code, p) >= rep.bound - 1e-9, tag + ": cross-polytope bound");
    }

    std::uniform_real_distribution<double> split(0.05, 0.95);
    std::vector<double> w = code.weights();
    for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
      const double total = w[i] + w[i + 1];
      w[i] = split(rng) * total;
      w[i + 1] = total - w[i];
    }
    const WeightedCode moved(n, code.points(), w);
    for (double p : {1.0, 2.0, 3.0}) {
      const double d = std::abs(p_frame_energy(moved, p) - p_frame_energy(code, p));
      c.expect(d < 1e-12, tag + ": redistribution changed the p=" + str(p) + " energy by " + str(d));
    }
  }
}

void expansion_positivity(Checker& c) {
  for (int n = 3; n <= 6; ++n) {
    const std::string tag = "simplex n=" + std::to_string(n);
    const auto simplex = catalog::simplex(n);
    const auto nodes = SymmetricNodeSet::from_alpha({-1.0 / n, 1.0 / n});
    c.expect(nodes.m() == 2, tag + ": m = 2");
    const auto lev = levenshtein_polynomial(n, nodes, simplex);
    c.expect(lev.gamma >= -1e-10, tag + ": gamma " + str(lev.gamma));
    c.expect(lev.residual < 1e-9, tag + ": residual " + str(lev.residual));
    for (const auto& f : {potentials::power(1.0), potentials::power(2.0), potentials::exponential()}) {
      const auto rep = genframe_bound(simplex, nodes, f);
      for (std::size_t i = 1; i < rep.d.size(); ++i) c.expect(rep.d[i] >= -1e-10, tag + ": d_i >= 0");
    }
  }

  const auto cell = catalog::cell24();
  const auto nodes = SymmetricNodeSet::from_alpha({-0.5, 0.0, 0.5});
  c.expect(nodes.m() == 3, "cell24: m = 3");
  const auto lev = levenshtein_polynomial(4, nodes, cell);
  c.expect(lev.gamma >= -1e-10, "cell24: gamma " + str(lev.gamma));
  c.expect(lev.residual < 1e-9, "cell24: residual " + str(lev.residual));
  const auto rep = genframe_bound(cell, nodes, potentials::power(2.0));
  for (std::size_t i = 1; i < rep.d.size(); ++i) c.expect(rep.d[i] >= -1e-10, "cell24: d_i >= 0");
  c.near(rep.bound, energy(cell, potentials::power(2.0)), 1e-12, "cell24: p=4 energy equals the bound");

  // P_k(2u^2 - 1) = (2^k / a_2k) P_2k(u) with a_2k the leading coefficient of P_2k.
  for (int n = 2; n <= 12; ++n)
    for (int k = 0; k <= 10; ++k) {
      const double scale = std::ldexp(1.0, k) / leading_coefficient(PolyFamily::gegenbauer(n), 2 * k);
      double worst = 0.0;
      for (int s = 0; s <= 200; ++s) {
        const double u = -1.0 + s / 100.0;
        const double lhs = eval(PolyFamily::half_interval(n, 0, 0), k, 2 * u * u - 1);
        worst = std::max(worst, std::abs(lhs - scale * eval(PolyFamily::gegenbauer(n), 2 * k, u)));
      }
      c.expect(worst < 1e-9, "even reduction n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + str(worst));
    }
}

void property_suites(Checker& c) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const auto code = testing::random_code(rng, n, 2 + static_cast<std::size_t>(trial % 13));
    const auto sums = gegenbauer_sums(code, 20);
    for (int k = 1; k <= 20; ++k)
      c.expect(sums[k] >= -1e-10, "random code " + std::to_string(trial) + ": sum of degree " + std::to_string(k));
  }

  const std::vector<std::pair<std::string, catalog::Params>> designs = {
      {"square_pyramid", {}},         {"simplex", {.n = 5}},
      {"cross_polytope", {.n = 4}},   {"cube", {.n = 5}},
      {"demihypercube", {.n = 5}},    {"regular_ngon", {.n = 2, .count = 7}},
      {"regular_ngon", {.n = 2, .count = 8}}, {"icosahedron", {}},
      {"cell24", {}}};
  for (const auto& [name, params] : designs) {
    const auto code = catalog::make(name, params);
    const int s = design_strength(code, 20).strength;
    for (int trial = 0; trial < 200; ++trial) {
      const Point z = testing::random_unit(rng, code.dim());
      c.expect(dot_spectrum(code, z).size() >= static_cast<std::size_t>(s / 2 + 1), name + ": generic point spectrum");
    }
    for (const Point& x : code.points()) {
      const bool anti = code.find(-x) >= 0;
      const int ends = 1 + (anti ? 1 : 0);
      const std::size_t need = static_cast<std::size_t>(std::max(s - ends, 0) / 2 + ends);
      c.expect(dot_spectrum(code, x).size() >= need, name + ": code point spectrum");
    }
  }

  std::uniform_real_distribution<double> alpha(0.05, 0.95);
  const std::vector<WeightedCode> pool = {catalog::square_pyramid(), catalog::simplex(3),     catalog::cross_polytope(3),
                                          catalog::cube(3),          catalog::icosahedron(), catalog::demihypercube(3, 1),
                                          catalog::cube(3, 0.1, 0.15)};
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto u = weighted_union(a, b, alpha(rng));
    const int want = std::min(design_strength(a, 10).strength, design_strength(b, 10).strength);
    c.expect(design_strength(u, 10).strength >= want, "union " + std::to_string(trial) + " keeps strength");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quadrature golden values", 1.0, golden_rules},
      {2, "quadrature exactness sweep", 10.0, exactness_sweep},
      {3, "square pyramid end-to-end", 5.0, square_pyramid},
      {4, "weighted hypercube", 10.0, weighted_hypercube},
      {5, "constrained energy, simplex", 30.0, simplex_energy},
      {6, "constrained energy, antipodal", 30.0, antipodal_energy},
      {7, "expansion positivity", 10.0, expansion_positivity},
      {8, "property suites", 30.0, property_suites},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed < crit.budget_seconds, "runtime " + str(elapsed) + " s over budget");
    const bool ok = c.count == 0;
    failed += ok ? 0 : 1;
    std::printf("%s %d %s (%d checks, %.3f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.title.c_str(), c.checks,
                elapsed);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    if (c.count > static_cast<int>(c.failures.size()))
      std::printf("    ... %d more\n", c.count - static_cast<int>(c.failures.size()));
  }
  return failed == 0 ? 0 : 1;
}
