#include <doctest.h>

#include <cmath>
#include <random>

#include "spherekit/catalog.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/errors.hpp"
#include "support.hpp"

using namespace spherekit;

namespace {

// Brute-force double sums with Boost Gegenbauer polynomials.
double oracle_sum(const WeightedCode& code, int k) {
  double s = 0.0;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = 0; j < code.size(); ++j) {
      const double t = std::clamp(code.point(i).dot(code.point(j)), -1.0, 1.0);
      s += code.weight(i) * code.weight(j) * testing::boost_gegenbauer(code.dim(), k, t);
    }
  return s;
}

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

}  // namespace

TEST_CASE("weighted code validation") {
  CHECK_THROWS_AS(WeightedCode(3, {vec({1, 0, 0})}, {0.5}), InvalidArgument);
  CHECK_THROWS_AS(WeightedCode(3, {vec({1, 0, 0}), vec({1, 0, 0})}, {0.5, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(WeightedCode(3, {vec({1, 0, 0}), vec({0, 2, 0})}, {0.5, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(WeightedCode(3, {vec({1, 0, 0}), vec({0, 1, 0})}, {1.0, 0.0}), InvalidArgument);
  CHECK_NOTHROW(WeightedCode(3, {vec({1, 0, 0}), vec({0, 1, 0})}, {1.0, 0.0}, true));
  CHECK_THROWS_AS(WeightedCode(3, {vec({1, 0})}, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(WeightedCode(1, {vec({1})}, {1.0}), InvalidArgument);
}

TEST_CASE("design strength") {
  CHECK(design_strength(catalog::square_pyramid(), 10).strength == 2);
  const auto simplex = catalog::simplex(3);
  const auto sr = design_strength(simplex, 5);
  CHECK(sr.strength == 2);
  REQUIRE(sr.residuals.size() == 5);
  CHECK(sr.residuals[2] > 1e-3);
  for (int k = 1; k <= 5; ++k) CHECK(sr.residuals[k - 1] == doctest::Approx(std::max(oracle_sum(simplex, k), 0.0)).epsilon(1e-12).scale(1.0));

  const WeightedCode single(3, {vec({0, 0, 1})}, {1.0});
  CHECK(design_strength(single, 4).strength == 0);
}

TEST_CASE("kk strength") {
  for (int n = 3; n <= 8; ++n) CHECK(kk_strength(catalog::simplex(n), 5) == 1);
  // The triangle is also a 2-design on S^1 with only +-1/2 dots squared, which makes it a (2,2)-design.
  CHECK(kk_strength(catalog::simplex(2), 5) == 2);
  CHECK(kk_strength(catalog::cross_polytope(2), 5) == 1);
  const WeightedCode pair(3, {vec({0, 0, 1}), vec({0, 0, -1})}, {0.5, 0.5});
  CHECK(kk_strength(pair, 5) == 0);
}

TEST_CASE("dot spectra") {
  const auto pyr = catalog::square_pyramid();
  const Point apex = vec({0, 0, 1});
  auto ex = dot_spectrum(pyr, apex, 1e-7, true);
  REQUIRE(ex.size() == 1);
  CHECK(ex.values[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(ex.masses[0] == doctest::Approx(0.75).epsilon(1e-14));
  auto in = dot_spectrum(pyr, apex);
  REQUIRE(in.size() == 2);
  CHECK(in.values[1] == doctest::Approx(1.0));
  CHECK(in.masses[1] == doctest::Approx(0.25));

  for (int n = 4; n <= 6; ++n) {
    const double w = std::ldexp(1.0, 1 - n);
    const auto cube = catalog::cube(n, 0.3 * w, 0.7 * w);
    for (int j = 0; j < n; ++j)
      for (double s : {1.0, -1.0}) {
        auto spec = dot_spectrum(cube, s * Point::Unit(n, j));
        REQUIRE(spec.size() == 2);
        CHECK(spec.values[0] == doctest::Approx(-1 / std::sqrt(n)).epsilon(1e-14));
        CHECK(spec.values[1] == doctest::Approx(1 / std::sqrt(n)).epsilon(1e-14));
        CHECK(spec.masses[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(spec.masses[1] == doctest::Approx(0.5).epsilon(1e-12));
      }
  }

  const WeightedCode single(3, {vec({0, 0, 1})}, {1.0});
  auto orth = dot_spectrum(single, vec({1, 0, 0}));
  REQUIRE(orth.size() == 1);
  CHECK(orth.values[0] == 0.0);
  CHECK(orth.masses[0] == 1.0);
  CHECK_THROWS_AS(dot_spectrum(single, vec({1, 1, 0})), InvalidArgument);
}

TEST_CASE("classification examples") {
  const auto pyr = catalog::square_pyramid();
  auto cert = classify(pyr, pyr.points());
  CHECK(cert.strength == 2);
  CHECK(cert.cls == DesignClass::weakly_sharp_even);
  REQUIRE(cert.extremal_points.size() == 1);
  CHECK((cert.extremal_points[0] - vec({0, 0, 1})).norm() < 1e-14);

  for (int n = 4; n <= 6; ++n) {
    const double w = std::ldexp(1.0, 1 - n);
    const auto cube = catalog::cube(n, 0.25 * w, 0.75 * w);
    std::vector<Point> axes;
    for (int j = 0; j < n; ++j) {
      axes.push_back(Point::Unit(n, j));
      axes.push_back(-Point::Unit(n, j));
    }
    auto c = classify(cube, axes);
    CHECK(c.strength == 3);
    CHECK(c.cls == DesignClass::stiff);
    CHECK(c.class_m == 2);
    CHECK(c.extremal_points.size() == static_cast<std::size_t>(2 * n));
  }

  for (int n = 3; n <= 6; ++n) {
    const auto cp = catalog::cross_polytope(n);
    auto c = classify(cp, {Point::Constant(n, 1.0 / std::sqrt(n))});
    CHECK(c.strength == 3);
    CHECK(c.cls == DesignClass::stiff);
    CHECK(c.class_m == 2);
  }
}

TEST_CASE("extremal witnesses reproduce the quadrature") {
  for (const auto& entry : catalog::entries()) {
    catalog::Params p;
    p.n = entry.name == "cell24" ? 4 : 3;
    p.count = 7;
    const auto code = catalog::make(entry.name, p);
    const auto cert = classify(code, default_candidates(code));
    for (const auto& w : cert.witnesses) {
      CHECK(w.node_error <= 1e-8);
      CHECK(w.mass_error <= 1e-8);
    }
    if (cert.cls != DesignClass::none) CHECK(!cert.extremal_points.empty());
  }
}

TEST_CASE("spectrum lower bound for points of the admissible sets") {
  std::mt19937_64 rng(3);
  for (const auto& entry : catalog::entries()) {
    catalog::Params p;
    p.n = 4;
    p.count = 8;
    if (entry.name == "square_pyramid" || entry.name == "icosahedron") p.n = 3;
    if (entry.name == "regular_ngon") p.n = 2;
    const auto code = catalog::make(entry.name, p);
    const int s = design_strength(code, 20).strength;
    // Random sphere points (a = b = 0) and code points / antipodes (a or b = 1).
    for (int trial = 0; trial < 100; ++trial) {
      const Point z = testing::random_unit(rng, code.dim());
      const std::size_t size = dot_spectrum(code, z).size();
      CHECK(size >= static_cast<std::size_t>(s / 2 + 1));
    }
    for (const Point& x : code.points()) {
      const bool anti = code.find(-x) >= 0;
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= (anti ? 1 : 0); ++b) {
          if (s < a + b) continue;
          CHECK(dot_spectrum(code, x).size() >= static_cast<std::size_t>((s - a - b) / 2 + 1 + a + b));
        }
    }
  }
}

TEST_CASE("Gegenbauer double sums are nonnegative on random codes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const auto code = testing::random_code(rng, n, 3 + trial % 11);
    const auto sums = gegenbauer_sums(code, 20);
    CHECK(sums[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 20; ++k) CHECK(sums[k] >= -1e-10);
    if (trial % 10 == 0)
      for (int k : {1, 5, 12}) CHECK(sums[k] == doctest::Approx(oracle_sum(code, k)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("weighted union") {
  const auto even = catalog::demihypercube(4, 0);
  const auto odd = catalog::demihypercube(4, 1);
  const auto u = weighted_union(even, odd, 0.5);
  CHECK(u.size() == 16);
  for (double w : u.weights()) CHECK(w == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(design_strength(u, 10).strength >= 3);

  const auto s = catalog::simplex(3);
  for (double alpha : {0.2, 0.5, 0.9}) {
    const auto same = weighted_union(s, s, alpha);
    REQUIRE(same.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(same.weight(i) == doctest::Approx(s.weight(i)).epsilon(1e-14));
  }
  CHECK(design_strength(weighted_union(s, catalog::cross_polytope(3), 1.0 / 3), 10).strength >= 2);

  CHECK_THROWS_AS(weighted_union(s, catalog::simplex(4), 0.5), InvalidArgument);
  CHECK_THROWS_AS(weighted_union(s, s, 1.0), InvalidArgument);
}

TEST_CASE("weighted union preserves strength on random mixtures") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> alpha(0.05, 0.95);
  const std::vector<WeightedCode> pool3 = {catalog::square_pyramid(), catalog::simplex(3), catalog::cross_polytope(3),
                                           catalog::cube(3), catalog::icosahedron(), catalog::demihypercube(3, 1)};
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = pool3[rng() % pool3.size()];
    const auto& b = pool3[rng() % pool3.size()];
    const auto u = weighted_union(a, b, alpha(rng));
    const int sa = design_strength(a, 10).strength;
    const int sb = design_strength(b, 10).strength;
    CHECK(design_strength(u, 10).strength >= std::min(sa, sb));
  }
}

TEST_CASE("antipodal doubling") {
  const auto cube = antipodal_double(catalog::simplex(3), 0.5);
  CHECK(cube.size() == 8);
  CHECK(design_strength(cube, 10).strength == 3);
  const auto g = cube.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i == j) continue;
      const double t = g(i, j);
      const bool ok = std::abs(std::abs(t) - 1.0 / 3.0) < 1e-12 || std::abs(t + 1.0) < 1e-12;
      CHECK(ok);
    }

  const WeightedCode single(3, {vec({0, 0, 1})}, {1.0});
  const auto pair = antipodal_double(single, 0.5);
  CHECK(pair.size() == 2);
  CHECK(pair.weight(0) == 0.5);
  CHECK(pair.point(1)[2] == -1.0);

  // A 2-stiff code without antipodes doubles to a 3-design.
  const auto demi = catalog::demihypercube(5, 0);
  REQUIRE(classify(demi, default_candidates(demi)).cls == DesignClass::stiff);
  CHECK(design_strength(antipodal_double(demi, 0.3), 10).strength >= 3);

  CHECK_THROWS_AS(antipodal_double(catalog::cross_polytope(3), 0.5), PreconditionError);
}
