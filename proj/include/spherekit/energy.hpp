#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherekit/dense_poly.hpp"
#include "spherekit/potential.hpp"
#include "spherekit/weighted_code.hpp"

namespace spherekit {

/// E_f = sum_{i,j} w_i w_j f((x_i . x_j)^2) over ordered pairs including i = j.
/// f is evaluated on [0,1]. Rows are summed independently and combined by a
/// fixed pairwise tree, so the result does not depend on the thread count.
double energy(const WeightedCode& code, const PotentialFunction& f);

/// sum_{i,j} w_i w_j |x_i . x_j|^p, p > 0.
double p_frame_energy(const WeightedCode& code, double p);

/// sum_i w_i (w_i + w_i'), w_i' the weight at -x_i (0 if -x_i is not in the code).
double theta(const WeightedCode& code);

/// Node set A = {alpha_1 < ... < alpha_m} symmetric about 0, m = 2L + nu.
struct SymmetricNodeSet {
  std::vector<double> alpha;
  /// 2 alpha_i^2 - 1 over the L negative alphas, ascending; interpolated with slope.
  std::vector<double> beta;
  int L = 0;
  int nu = 0;

  int m() const { return static_cast<int>(alpha.size()); }

  /// Sorts and validates: values in (-1,1), distinct, alpha_i = -alpha_{m+1-i} within 1e-12.
  static SymmetricNodeSet from_alpha(std::vector<double> alpha);
  /// Parses a comma-separated list such as "-0.5,0,0.5".
  static SymmetricNodeSet parse(const std::string& text);
};

/// Checks that the reference is an (m-1,m-1)-design whose off-diagonal dot
/// products lie in A u {-1, 1} (within 1e-8). Throws HypothesisError.
void check_reference(const WeightedCode& reference, const SymmetricNodeSet& nodes);

struct LevenshteinResult {
  DensePoly pi;  // prod_{i<=L} (t - beta_i)
  double gamma = 0.0;
  /// max |coefficient| of pi on degrees <= L - 2 of the monic (1, nu) half-interval family.
  double residual = 0.0;
  std::vector<double> coeffs;  // full expansion, degrees 0..L
};

/// Writes pi = P_L + gamma P_{L-1} in the monic family orthogonal for
/// (1-t)^(1+(n-3)/2) (1+t)^(nu-1/2). L = 0 gives pi = 1, gamma = 0.
/// Throws HypothesisError if the reference fails check_reference, if the
/// residual reaches 1e-9, or if gamma < -1e-10.
LevenshteinResult levenshtein_polynomial(int n, const SymmetricNodeSet& nodes,
                                         const WeightedCode& reference);

struct EnergyBoundReport {
  int n = 0;
  int m = 0;
  int L = 0;
  int nu = 0;
  std::vector<double> beta;
  DensePoly p;                 // interpolant of g(t) = f((t+1)/2) at the beta nodes
  std::vector<double> d;       // q(u) = p(2u^2 - 1) = sum_k d_k P_2k^(n)(u)
  double theta_star = 0.0;     // theta(reference)
  double f_at_one = 0.0;
  double p_at_one = 0.0;
  double bound = 0.0;          // d_0 + (f(1) - p(1)) theta_star
  double gamma = 0.0;
  double levenshtein_residual = 0.0;
  double energy_reference = 0.0;
  double identity_residual = 0.0;  // |bound - energy_reference|
  bool certified = true;
  std::vector<SignCheck> sign_checks;  // f^(k) on (0,1), k = 1..m
};

/// Lower bound on E_f over weighted codes with theta >= theta(reference).
///
/// Requires check_reference and f^(k) >= 0 on (0,1) for k = 1..m (sampled);
/// the sign requirement is waived with `force` (certified = false).
/// Throws HypothesisError on unmet hypotheses and InconsistencyError if
/// some d_i (i >= 1) is below -1e-10 or the bound misses the reference
/// energy by more than 1e-9.
EnergyBoundReport genframe_bound(const WeightedCode& reference, const SymmetricNodeSet& nodes,
                                 const PotentialFunction& f, bool force = false);

enum class EqualityMode { general, antipodal, plain };

std::string to_string(EqualityMode mode);
EqualityMode parse_mode(const std::string& text);

struct EqualityFlags {
  bool design = false;       // (m-1,m-1)-design
  double off_a_mass = 0.0;   // weight product on ordered pairs with dot in (-1,1) \ A
  bool off_a_zero = false;
  bool theta_match = false;  // theta(code) = theta_star
  std::optional<bool> pair_totals;  // antipodal mode: every antipodal pair weighs 1/N
  std::optional<bool> plain;        // plain mode: equal weights, no antipodal pairs

  bool all() const {
    return design && off_a_zero && theta_match && pair_totals.value_or(true) && plain.value_or(true);
  }
};

/// Diagnostics for equality in the energy bound, each within 1e-9.
EqualityFlags check_equality_conditions(const WeightedCode& code, const EnergyBoundReport& reference,
                                        const SymmetricNodeSet& nodes, EqualityMode mode);

}  // namespace spherekit
