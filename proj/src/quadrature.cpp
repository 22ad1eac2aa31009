#include "spherekit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spherekit/errors.hpp"
#include "spherekit/orthopoly.hpp"

namespace spherekit {

QuadratureRule build_rule(int n, int m, int mu, int nu) {
  validate(PolyFamily::adjacent(n, mu, nu));
  if (m < 1)
    throw UnsupportedParameters("quadrature needs m >= 1 (got m=" + std::to_string(m) +
                                "); endpoint-only rules are not supported");

  QuadratureRule rule{n, m, mu, nu, {}, {}, 2 * m - 1 + mu + nu};
  const std::vector<double> interior = roots(PolyFamily::adjacent(n, mu, nu), m);
  // Every R_j below has degree <= 2m, so an (m + 2)-point Gauss rule for w_n integrates it
  // exactly. Evaluating the products pointwise avoids the cancellation of a monomial expansion.
  const double a = (n - 3) / 2.0;
  const GaussRule gauss = jacobi_gauss(a, a, m + 2);
  double mass = 0.0;
  for (double w : gauss.weights) mass += w;
  auto integrate = [&](auto&& g) {
    double acc = 0.0;
    for (std::size_t q = 0; q < gauss.nodes.size(); ++q) acc += gauss.weights[q] * g(gauss.nodes[q]);
    return acc / mass;
  };
  auto endpoint_factor = [&](double t) {
    return (mu == 1 ? 1.0 - t : 1.0) * (nu == 1 ? 1.0 + t : 1.0);
  };
  auto phi = [&](double t) {
    double v = 1.0;
    for (double x : interior) v *= t - x;
    return v;
  };

  if (nu == 1) {
    // R_0 = (phi / phi(-1))^2 ((1 - t) / 2)^mu
    const double scale = phi(-1.0);
    rule.nodes.push_back(-1.0);
    rule.weights.push_back(integrate([&](double t) {
      const double r = phi(t) / scale;
      return r * r * (mu == 1 ? (1.0 - t) / 2.0 : 1.0);
    }));
  }
  for (int j = 0; j < m; ++j) {
    const double xj = interior[j];
    const double at_node = endpoint_factor(xj);
    rule.nodes.push_back(xj);
    rule.weights.push_back(integrate([&](double t) {
      double l = 1.0;
      for (int k = 0; k < m; ++k)
        if (k != j) l *= (t - interior[k]) / (xj - interior[k]);
      return l * l * endpoint_factor(t) / at_node;
    }));
  }
  if (mu == 1) {
    // R_{m+1} = (phi / phi(1))^2 ((1 + t) / 2)^nu
    const double scale = phi(1.0);
    rule.nodes.push_back(1.0);
    rule.weights.push_back(integrate([&](double t) {
      const double r = phi(t) / scale;
      return r * r * (nu == 1 ? (1.0 + t) / 2.0 : 1.0);
    }));
  }

  for (std::size_t j = 0; j < rule.weights.size(); ++j) {
    if (!(rule.weights[j] > 0.0))
      throw InconsistencyError("quadrature weight " + std::to_string(j) + " is non-positive (" +
                               std::to_string(rule.weights[j]) + ") for n=" + std::to_string(n) +
                               ", m=" + std::to_string(m) + ", mu=" + std::to_string(mu) +
                               ", nu=" + std::to_string(nu));
  }
  return rule;
}

double exactness_residual(const QuadratureRule& rule, int degree) {
  if (degree < 0) throw InvalidArgument("exactness_residual: degree must be >= 0");
  const std::vector<double> moments = weight_moments(rule.n, degree);
  double worst = 0.0;
  for (int k = 0; k <= degree; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      acc += rule.weights[j] * std::pow(rule.nodes[j], k);
    worst = std::max(worst, std::abs(acc - moments[k]));
  }
  return worst;
}

}  // namespace spherekit
