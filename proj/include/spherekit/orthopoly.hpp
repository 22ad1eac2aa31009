#pragma once

#include <span>
#include <vector>

#include "spherekit/dense_poly.hpp"

namespace spherekit {

enum class Normalization { unit_at_one, monic };

/// Which weight the family is orthogonal against.
///
/// `sphere`        (1-t)^mu (1+t)^nu w_n(t), w_n(t) proportional to (1-t^2)^((n-3)/2).
///                 mu = nu = 0 gives the Gegenbauer polynomials P_k^(n); the other
///                 three choices are the adjacent polynomials P_k^{mu,nu}.
/// `half_interval` (1-t)^(mu+(n-3)/2) (1+t)^(nu-1/2), the weight obtained from w_n
///                 by the substitution t = 2u^2 - 1.
enum class WeightKind { sphere, half_interval };

struct PolyFamily {
  int n = 3;
  int mu = 0;
  int nu = 0;
  Normalization normalization = Normalization::unit_at_one;
  WeightKind weight = WeightKind::sphere;

  static PolyFamily gegenbauer(int n) { return {n, 0, 0}; }
  static PolyFamily adjacent(int n, int mu, int nu) { return {n, mu, nu}; }
  static PolyFamily half_interval(int n, int mu, int nu,
                                  Normalization norm = Normalization::monic) {
    return {n, mu, nu, norm, WeightKind::half_interval};
  }

  /// Jacobi exponent of (1 - t).
  double alpha() const;
  /// Jacobi exponent of (1 + t).
  double beta() const;
};

/// Throws InvalidArgument unless n >= 2 and mu, nu in {0, 1}.
void validate(const PolyFamily& family);

/// Monic three-term recurrence p_{k+1}(t) = (t - diag[k]) p_k(t) - offdiag[k] p_{k-1}(t).
/// offdiag[0] is unused and set to 0.
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

/// Recurrence coefficients for degrees 0..count-1, from the closed-form Jacobi formulas.
Recurrence recurrence(const PolyFamily& family, int count);

/// mu_k = integral of t^k w_n(t) dt over [-1,1] for k = 0..kmax, with mu_0 = 1.
std::vector<double> weight_moments(int n, int kmax);

/// Evaluates degrees 0..max_degree of one family at many points without
/// rebuilding the recurrence.
class FamilyEvaluator {
 public:
  FamilyEvaluator(const PolyFamily& family, int max_degree);

  int max_degree() const { return max_degree_; }
  /// Writes P_0(t)..P_{max_degree}(t) into out (size max_degree + 1).
  void eval_all(double t, std::span<double> out) const;
  std::vector<double> eval_all(double t) const;

 private:
  int max_degree_;
  bool unit_at_one_;
  Recurrence rec_;
  // Unit-at-one ratio form: r_{k+1} = ((t - diag_k) r_k - lag_k r_{k-1}) * scale_k.
  std::vector<double> lag_;
  std::vector<double> scale_;
};

double eval(const PolyFamily& family, int k, double t);
/// Values of degrees 0..kmax at t.
std::vector<double> eval_all(const PolyFamily& family, int kmax, double t);
/// Value of the family member at t = 1 when taken monic (1 for unit-at-one).
double value_at_one_monic(const PolyFamily& family, int k);
/// Leading monomial coefficient of the degree-k member.
double leading_coefficient(const PolyFamily& family, int k);

/// Monomial-basis form of the degree-k member. Exact algebra, but the
/// coefficients grow quickly; use for small k only.
DensePoly to_dense(const PolyFamily& family, int k);

/// The m simple roots, ascending, from the Jacobi-matrix eigenvalues followed
/// by two Newton steps. Throws NumericFailure if the eigen-solver fails.
std::vector<double> roots(const PolyFamily& family, int m);

/// Coefficients c_0..c_d with p = sum_k c_k P_k in the given family.
/// Computed algebraically through the recurrence, without integration.
std::vector<double> expand_in_family(const DensePoly& p, const PolyFamily& family);

/// Polynomial written in the Gegenbauer basis {P_k^(n)}, or in the even
/// subsequence {P_{2k}^(n)} when `even` is set.
struct GegenbauerExpansion {
  int n = 3;
  bool even = false;
  std::vector<double> coeffs;

  double operator()(double t) const;
};

/// Expand q(u) = p(2u^2 - 1) as sum_k d_k P_{2k}^(n)(u).
///
/// Uses P_k(2u^2 - 1) = (2^k / a_{2k}) P_{2k}^(n)(u), where P_k is the monic
/// half-interval (0,0) family and a_{2k} is the leading coefficient of P_{2k}^(n).
GegenbauerExpansion expand_even_in_gegenbauer(const DensePoly& p, int n);

/// integral of Q_i Q_j Q_k (1-t)^a (1+t)^b dt with a = mu + (n-3)/2, b = nu - 1/2,
/// Q the monic half-interval family, via a Gauss rule of sufficient degree.
/// Throws DomainError unless a >= b > -1 and a + b + 1 >= 0.
double triple_product(int n, int mu, int nu, int i, int j, int k);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule with `count` nodes for (1-t)^a (1+t)^b on [-1,1] (unnormalized weight).
GaussRule jacobi_gauss(double a, double b, int count);

}  // namespace spherekit
