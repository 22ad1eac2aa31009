#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/chebyshev.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/math/special_functions/jacobi.hpp>

#include "spherekit/weighted_code.hpp"

namespace testing {

using spherekit::Point;
using spherekit::WeightedCode;

inline Point random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Point p(n);
  for (int i = 0; i < n; ++i) p[i] = g(rng);
  return p / p.norm();
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(count);
  double total = 0.0;
  for (double& x : w) total += (x = u(rng));
  for (double& x : w) x /= total;
  // Absorb rounding so the weights sum to 1 within the code tolerance.
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) s += w[i];
  w.back() = 1.0 - s;
  return w;
}

inline WeightedCode random_code(std::mt19937_64& rng, int n, std::size_t count) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_unit(rng, n));
  return WeightedCode(n, std::move(pts), random_weights(rng, count));
}

/// Random antipodal code: N pairs {x, -x} with random weights, random splits inside pairs.
inline WeightedCode random_antipodal_code(std::mt19937_64& rng, int n, std::size_t pairs) {
  std::vector<Point> pts;
  const std::vector<double> totals = random_weights(rng, pairs);
  std::uniform_real_distribution<double> split(0.1, 0.9);
  std::vector<double> w;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Point x = random_unit(rng, n);
    const double s = split(rng);
    pts.push_back(x);
    pts.push_back(-x);
    w.push_back(s * totals[i]);
    w.push_back((1.0 - s) * totals[i]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) sum += w[i];
  w.back() = 1.0 - sum;
  return WeightedCode(n, std::move(pts), std::move(w));
}

/// Gegenbauer P_k^(n), normalized to 1 at t = 1, from Boost.
inline double boost_gegenbauer(int n, int k, double t) {
  if (n == 2) return boost::math::chebyshev_t(static_cast<unsigned>(k), t);
  const double lambda = (n - 2) / 2.0;
  return boost::math::gegenbauer(static_cast<unsigned>(k), lambda, t) /
         boost::math::gegenbauer(static_cast<unsigned>(k), lambda, 1.0);
}

/// Jacobi P_k^(a,b) normalized to 1 at t = 1, from Boost.
inline double boost_jacobi_unit(int k, double a, double b, double t) {
  return boost::math::jacobi(static_cast<unsigned>(k), a, b, t) /
         boost::math::jacobi(static_cast<unsigned>(k), a, b, 1.0);
}

/// Integral of g(t) (1-t)^a (1+t)^b over [-1,1] by tanh-sinh.
template <class F>
double weighted_integral(F g, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto integrand = [&](double t, double tc) {
    // tc is the distance to the nearer endpoint, which keeps the singular factor accurate.
    const double one_minus = t > 0 ? tc : 1.0 - t;
    const double one_plus = t < 0 ? -tc : 1.0 + t;
    return g(t) * std::pow(one_minus, a) * std::pow(one_plus, b);
  };
  return integrator.integrate(integrand, -1.0, 1.0);
}

/// Integral of g against the normalized sphere weight w_n.
template <class F>
double sphere_integral(F g, int n) {
  const double e = (n - 3) / 2.0;
  return weighted_integral(g, e, e) / weighted_integral([](double) { return 1.0; }, e, e);
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace testing
