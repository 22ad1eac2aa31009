#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace spherekit {

/// Real polynomial in the monomial basis, coefficients in ascending degree.
///
/// The zero polynomial is stored as an empty coefficient vector and has
/// degree -1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<double> coeffs);
  DensePoly(std::initializer_list<double> coeffs);

  static DensePoly constant(double c);
  /// Monic polynomial with the given roots.
  static DensePoly from_roots(std::span<const double> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int k) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double t) const;
  DensePoly derivative() const;

  /// q(u) = p(a*u^2 + b); used to pull a polynomial in t back to u with t = 2u^2 - 1.
  DensePoly compose_quadratic(double a, double b) const;

  /// Drop trailing coefficients with magnitude <= tol.
  DensePoly trimmed(double tol = 0.0) const;

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(double s);

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, double s) { return a *= s; }
  friend DensePoly operator*(double s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);

 private:
  std::vector<double> coeffs_;
};

/// Integral of p against a weight whose monomial moments are given.
/// moments.size() must exceed p.degree().
double integrate_with_moments(const DensePoly& p, std::span<const double> moments);

}  // namespace spherekit
