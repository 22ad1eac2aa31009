#include "spherekit/orthopoly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "spherekit/errors.hpp"

namespace spherekit {
namespace {

std::string describe(const PolyFamily& f) {
  return std::string(f.weight == WeightKind::sphere ? "sphere" : "half-interval") +
         " family (n=" + std::to_string(f.n) + ", mu=" + std::to_string(f.mu) +
         ", nu=" + std::to_string(f.nu) + ")";
}

// Monic value and derivative at t.
std::pair<double, double> monic_value_and_slope(const Recurrence& rec, int k, double t) {
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  for (int j = 0; j < k; ++j) {
    const double a = rec.diag[j];
    const double b = j == 0 ? 0.0 : rec.offdiag[j];
    const double p_next = (t - a) * p - b * p_prev;
    const double d_next = p + (t - a) * d - b * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

// Monic Jacobi recurrence for (1-t)^a (1+t)^b.
Recurrence jacobi_recurrence(double a, double b, int count) {
  Recurrence rec;
  rec.diag.assign(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  rec.offdiag.assign(rec.diag.size(), 0.0);
  for (int k = 0; k < count; ++k) {
    const double s = 2.0 * k + a + b;
    if (k == 0) {
      rec.diag[0] = (b - a) / (a + b + 2.0);
      continue;
    }
    rec.diag[k] = (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      // (1 + a + b) cancels; the general formula is 0/0 when a + b = -1.
      rec.offdiag[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      rec.offdiag[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return rec;
}

}  // namespace

double PolyFamily::alpha() const { return mu + 0.5 * (n - 3); }

double PolyFamily::beta() const {
  return weight == WeightKind::sphere ? nu + 0.5 * (n - 3) : nu - 0.5;
}

void validate(const PolyFamily& family) {
  if (family.n < 2)
    throw InvalidArgument("invalid dimension n=" + std::to_string(family.n) + " (need n >= 2)");
  if ((family.mu != 0 && family.mu != 1) || (family.nu != 0 && family.nu != 1))
    throw InvalidArgument("mu and nu must be 0 or 1, got " + describe(family));
}

Recurrence recurrence(const PolyFamily& family, int count) {
  validate(family);
  return jacobi_recurrence(family.alpha(), family.beta(), count);
}

std::vector<double> weight_moments(int n, int kmax) {
  if (n < 2) throw InvalidArgument("invalid dimension n=" + std::to_string(n) + " (need n >= 2)");
  if (kmax < 0) throw InvalidArgument("weight_moments: kmax must be >= 0");
  std::vector<double> mom(static_cast<std::size_t>(kmax) + 1, 0.0);
  mom[0] = 1.0;
  for (int k = 2; k <= kmax; k += 2)
    mom[k] = static_cast<double>(k - 1) / static_cast<double>(k + n - 2) * mom[k - 2];
  return mom;
}

FamilyEvaluator::FamilyEvaluator(const PolyFamily& family, int max_degree)
    : max_degree_(max_degree),
      unit_at_one_(family.normalization == Normalization::unit_at_one),
      rec_(recurrence(family, std::max(max_degree, 0))) {
  if (max_degree < 0) throw InvalidArgument("FamilyEvaluator: degree must be >= 0");
  lag_.assign(static_cast<std::size_t>(max_degree), 0.0);
  scale_.assign(static_cast<std::size_t>(max_degree), 1.0);
  if (!unit_at_one_) {
    for (int k = 1; k < max_degree; ++k) lag_[k] = rec_.offdiag[k];
    return;
  }
  // With r_k = p_k(t) / p_k(1) and rho_k = p_{k-1}(1) / p_k(1), the monic
  // recurrence divided by p_{k+1}(1) involves only t-independent constants.
  double rho = 0.0;
  for (int k = 0; k < max_degree; ++k) {
    const double b = k == 0 ? 0.0 : rec_.offdiag[k];
    const double denom = (1.0 - rec_.diag[k]) - b * rho;
    lag_[k] = b * rho;
    scale_[k] = 1.0 / denom;
    rho = 1.0 / denom;
  }
}

void FamilyEvaluator::eval_all(double t, std::span<double> out) const {
  out[0] = 1.0;
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < max_degree_; ++k) {
    const double next = ((t - rec_.diag[k]) * cur - lag_[k] * prev) * scale_[k];
    prev = cur;
    cur = next;
    out[k + 1] = cur;
  }
}

std::vector<double> FamilyEvaluator::eval_all(double t) const {
  std::vector<double> out(static_cast<std::size_t>(max_degree_) + 1);
  eval_all(t, out);
  return out;
}

std::vector<double> eval_all(const PolyFamily& family, int kmax, double t) {
  return FamilyEvaluator(family, kmax).eval_all(t);
}

double eval(const PolyFamily& family, int k, double t) {
  if (k < 0) throw InvalidArgument("eval: degree must be >= 0");
  return eval_all(family, k, t).back();
}

double value_at_one_monic(const PolyFamily& family, int k) {
  if (family.normalization == Normalization::unit_at_one) {
    PolyFamily monic = family;
    monic.normalization = Normalization::monic;
    return eval(monic, k, 1.0);
  }
  return eval(family, k, 1.0);
}

double leading_coefficient(const PolyFamily& family, int k) {
  if (family.normalization == Normalization::monic) return 1.0;
  return 1.0 / value_at_one_monic(family, k);
}

DensePoly to_dense(const PolyFamily& family, int k) {
  const Recurrence rec = recurrence(family, k);
  DensePoly prev, cur = DensePoly::constant(1.0);
  const DensePoly t{0.0, 1.0};
  for (int j = 0; j < k; ++j) {
    DensePoly next = (t - DensePoly::constant(rec.diag[j])) * cur;
    if (j > 0) next -= prev * rec.offdiag[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (family.normalization == Normalization::unit_at_one) cur *= 1.0 / cur(1.0);
  return cur;
}

std::vector<double> roots(const PolyFamily& family, int m) {
  if (m < 1) throw InvalidArgument("roots: degree must be >= 1");
  const Recurrence rec = recurrence(family, m);
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int k = 0; k < m; ++k) diag[k] = rec.diag[k];
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(rec.offdiag[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("Jacobi-matrix eigen-solver did not converge for " + describe(family) +
                         ", degree " + std::to_string(m));
  std::vector<double> r(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  for (double& x : r) {
    for (int step = 0; step < 2; ++step) {
      const auto [p, dp] = monic_value_and_slope(rec, m, x);
      if (dp == 0.0) break;
      x -= p / dp;
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<double> expand_in_family(const DensePoly& p, const PolyFamily& family) {
  const int d = p.degree();
  if (d < 0) return {};
  const Recurrence rec = recurrence(family, d + 1);
  // Horner with multiplication by t acting on monic coefficients:
  // t p_j = p_{j+1} + diag[j] p_j + offdiag[j] p_{j-1}.
  std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
  int top = -1;
  for (int k = d; k >= 0; --k) {
    std::vector<double> next(c.size(), 0.0);
    for (int j = 0; j <= top; ++j) {
      next[j + 1] += c[j];
      next[j] += rec.diag[j] * c[j];
      if (j > 0) next[j - 1] += rec.offdiag[j] * c[j];
    }
    next[0] += p.coeff(k);
    c = std::move(next);
    ++top;
  }
  if (family.normalization == Normalization::unit_at_one) {
    PolyFamily monic = family;
    monic.normalization = Normalization::monic;
    const std::vector<double> at_one = eval_all(monic, d, 1.0);
    for (int j = 0; j <= d; ++j) c[j] *= at_one[j];
  }
  return c;
}

double GegenbauerExpansion::operator()(double t) const {
  if (coeffs.empty()) return 0.0;
  const int kmax = even ? 2 * (static_cast<int>(coeffs.size()) - 1) : static_cast<int>(coeffs.size()) - 1;
  const std::vector<double> vals = eval_all(PolyFamily::gegenbauer(n), kmax, t);
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * vals[even ? 2 * k : k];
  return acc;
}

GegenbauerExpansion expand_even_in_gegenbauer(const DensePoly& p, int n) {
  GegenbauerExpansion out{n, true, {}};
  const std::vector<double> c = expand_in_family(p, PolyFamily::half_interval(n, 0, 0));
  if (c.empty()) return out;
  const int kmax = static_cast<int>(c.size()) - 1;
  PolyFamily monic_geg = PolyFamily::gegenbauer(n);
  monic_geg.normalization = Normalization::monic;
  const std::vector<double> s = eval_all(monic_geg, 2 * kmax, 1.0);
  out.coeffs.resize(c.size());
  for (int k = 0; k <= kmax; ++k) {
    // d_k = c_k 2^k / a_{2k} with a_{2k} = 1 / s_{2k}.
    out.coeffs[k] = c[k] * std::ldexp(1.0, k) * s[2 * k];
  }
  return out;
}

GaussRule jacobi_gauss(double a, double b, int count) {
  if (count < 1) throw InvalidArgument("jacobi_gauss: need at least one node");
  if (a <= -1.0 || b <= -1.0) throw DomainError("jacobi_gauss: exponents must exceed -1");
  const Recurrence rec = jacobi_recurrence(a, b, count);
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  for (int k = 0; k < count; ++k) diag[k] = rec.diag[k];
  for (int k = 1; k < count; ++k) sub[k - 1] = std::sqrt(rec.offdiag[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("jacobi_gauss: eigen-solver did not converge");
  const double mass = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                               std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  GaussRule rule;
  for (int k = 0; k < count; ++k) {
    rule.nodes.push_back(solver.eigenvalues()[k]);
    const double v = solver.eigenvectors()(0, k);
    rule.weights.push_back(mass * v * v);
  }
  return rule;
}

double triple_product(int n, int mu, int nu, int i, int j, int k) {
  const PolyFamily fam = PolyFamily::half_interval(n, mu, nu);
  validate(fam);
  const double a = fam.alpha();
  const double b = fam.beta();
  if (!(a >= b && b > -1.0 && a + b + 1.0 >= 0.0))
    throw DomainError("triple_product: need a >= b > -1 and a + b + 1 >= 0, got a=" +
                      std::to_string(a) + ", b=" + std::to_string(b));
  if (i < 0 || j < 0 || k < 0) throw InvalidArgument("triple_product: degrees must be >= 0");
  const int count = (i + j + k) / 2 + 1;
  const GaussRule rule = jacobi_gauss(a, b, count);
  double acc = 0.0;
  const int top = std::max({i, j, k});
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const std::vector<double> v = eval_all(fam, top, rule.nodes[q]);
    acc += rule.weights[q] * v[i] * v[j] * v[k];
  }
  return acc;
}

}  // namespace spherekit
