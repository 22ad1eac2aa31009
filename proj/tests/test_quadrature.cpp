#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <algorithm>
#include <cmath>

#include "spherekit/errors.hpp"
#include "spherekit/orthopoly.hpp"
#include "spherekit/quadrature.hpp"
#include "support.hpp"

using namespace spherekit;

TEST_CASE("golden rules") {
  auto r = build_rule(3, 2, 0, 0);
  REQUIRE(r.nodes.size() == 2);
  CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.exactness_degree == 3);

  auto up = build_rule(3, 1, 1, 0);
  REQUIRE(up.nodes.size() == 2);
  CHECK(std::abs(up.nodes[0] + 1.0 / 3.0) < 1e-12);
  CHECK(up.nodes[1] == 1.0);
  CHECK(std::abs(up.weights[0] - 0.75) < 1e-12);
  CHECK(std::abs(up.weights[1] - 0.25) < 1e-12);

  auto down = build_rule(3, 1, 0, 1);
  CHECK(down.nodes[0] == -1.0);
  CHECK(std::abs(down.nodes[1] - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(down.weights[0] - 0.25) < 1e-12);
  CHECK(std::abs(down.weights[1] - 0.75) < 1e-12);
}

TEST_CASE("exactness residual examples") {
  CHECK(exactness_residual(build_rule(3, 1, 1, 0), 2) < 1e-14);
  const auto g = build_rule(3, 2, 0, 0);
  CHECK(exactness_residual(g, 3) < 1e-14);
  CHECK(exactness_residual(g, 4) == doctest::Approx(0.2 - 1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("exactness and positivity sweep") {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= 10; ++m)
      for (int mu = 0; mu <= 1; ++mu)
        for (int nu = 0; nu <= 1; ++nu) {
          const auto r = build_rule(n, m, mu, nu);
          CHECK(r.exactness_degree == 2 * m - 1 + mu + nu);
          REQUIRE(r.nodes.size() == static_cast<std::size_t>(m + mu + nu));
          CHECK(exactness_residual(r, r.exactness_degree) < 1e-9);
          double total = 0.0;
          for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            CHECK(r.weights[j] > 0.0);
            total += r.weights[j];
            if (j) CHECK(r.nodes[j] > r.nodes[j - 1]);
          }
          CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
          CHECK((r.nodes.front() == -1.0) == (nu == 1));
          CHECK((r.nodes.back() == 1.0) == (mu == 1));
        }
}

TEST_CASE("mirror symmetry of the one-endpoint rules") {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= 10; ++m) {
      const auto a = build_rule(n, m, 1, 0);
      const auto b = build_rule(n, m, 0, 1);
      const std::size_t s = a.nodes.size();
      for (std::size_t j = 0; j < s; ++j) {
        CHECK(std::abs(b.nodes[j] + a.nodes[s - 1 - j]) < 1e-12);
        CHECK(std::abs(b.weights[j] - a.weights[s - 1 - j]) < 1e-12);
      }
    }
}

TEST_CASE("two-endpoint rule interior nodes are Gegenbauer roots of dimension n + 2") {
  for (int n = 2; n <= 10; ++n)
    for (int m = 1; m <= 8; ++m) {
      const auto r = build_rule(n, m, 1, 1);
      const auto z = roots(PolyFamily::gegenbauer(n + 2), m);
      for (int j = 0; j < m; ++j) CHECK(std::abs(r.nodes[j + 1] - z[j]) < 1e-12);
    }
}

TEST_CASE("n = 3 Gauss rule matches Boost Gauss-Legendre") {
  // w_3 is the constant density 1/2.
  boost::math::quadrature::gauss<double, 7> gl;
  const auto r = build_rule(3, 7, 0, 0);
  const auto& abscissa = gl.abscissa();
  const auto& weights = gl.weights();
  // Boost stores the nonnegative half, with the zero node first for odd orders.
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    const double x = abscissa[i];
    const auto hit = std::find_if(r.nodes.begin(), r.nodes.end(), [&](double z) { return std::abs(z - x) < 1e-13; });
    REQUIRE(hit != r.nodes.end());
    CHECK(r.weights[hit - r.nodes.begin()] == doctest::Approx(weights[i] / 2).epsilon(1e-13));
  }
}

TEST_CASE("rules integrate polynomials against the Boost integral") {
  for (int n : {2, 4, 7}) {
    const auto r = build_rule(n, 4, 1, 1);
    auto p = [](double t) { return 3 * std::pow(t, 7) - t * t * t + 2 * t * t + 0.5; };
    double quad = 0.0;
    for (std::size_t j = 0; j < r.nodes.size(); ++j) quad += r.weights[j] * p(r.nodes[j]);
    CHECK(quad == doctest::Approx(testing::sphere_integral(p, n)).epsilon(1e-12));
  }
}

TEST_CASE("unsupported and invalid parameters") {
  CHECK_THROWS_AS(build_rule(3, 0, 0, 0), UnsupportedParameters);
  CHECK_THROWS_AS(build_rule(3, 0, 1, 1), UnsupportedParameters);
  CHECK_THROWS_AS(build_rule(1, 2, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(build_rule(3, 2, 2, 0), InvalidArgument);
}
