#include "spherekit/dense_poly.hpp"

#include <cmath>

#include "spherekit/errors.hpp"

namespace spherekit {

DensePoly::DensePoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

DensePoly::DensePoly(std::initializer_list<double> coeffs)
    : DensePoly(std::vector<double>(coeffs)) {}

DensePoly DensePoly::constant(double c) { return DensePoly(std::vector<double>{c}); }

DensePoly DensePoly::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return DensePoly(std::move(c));
}

double DensePoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double DensePoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

DensePoly DensePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return DensePoly(std::move(d));
}

DensePoly DensePoly::compose_quadratic(double a, double b) const {
  // Horner in the polynomial ring: r <- r * (a u^2 + b) + c_k.
  const DensePoly inner{b, 0.0, a};
  DensePoly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * inner;
    r += DensePoly::constant(*it);
  }
  return r;
}

DensePoly DensePoly::trimmed(double tol) const {
  std::vector<double> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
  return DensePoly(std::move(c));
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  return *this;
}

DensePoly& DensePoly::operator*=(double s) {
  if (s == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (double& c : coeffs_) c *= s;
  return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return DensePoly(std::move(c));
}

double integrate_with_moments(const DensePoly& p, std::span<const double> moments) {
  if (static_cast<int>(moments.size()) <= p.degree())
    throw InvalidArgument("integrate_with_moments: not enough moments for degree " +
                          std::to_string(p.degree()));
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc += p.coeff(k) * moments[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace spherekit
