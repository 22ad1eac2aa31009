#pragma once

#include <string>
#include <vector>

#include "spherekit/weighted_code.hpp"

namespace spherekit {

/// S_k = sum_{i,j} w_i w_j P_k^(n)(x_i . x_j) for k = 0..kmax (raw, not clamped).
std::vector<double> gegenbauer_sums(const WeightedCode& code, int kmax);

struct StrengthResult {
  int strength = 0;
  /// residuals[k-1] = max(S_k, 0) for k = 1..max_m.
  std::vector<double> residuals;
};

/// Largest m <= max_m such that S_1..S_m are all below tol.
StrengthResult design_strength(const WeightedCode& code, int max_m, double tol = 1e-9);

/// Largest k <= max_k such that S_2, S_4, ..., S_2k are all below tol. Always >= 0.
int kk_strength(const WeightedCode& code, int max_k, double tol = 1e-9);

/// Distinct dot products of a fixed point against the code, with the total
/// weight of code points attaining each value.
struct DotSpectrum {
  std::vector<double> values;  // ascending
  std::vector<double> masses;

  std::size_t size() const { return values.size(); }
};

/// Dot products single-linkage clustered at cluster_tol; each cluster is
/// represented by the mean of its members. With exclude_self, code points at
/// dot >= 1 - cluster_tol from z are skipped.
DotSpectrum dot_spectrum(const WeightedCode& code, const Point& z, double cluster_tol = 1e-7,
                         bool exclude_self = false);

enum class DesignClass { none, stiff, weakly_sharp_even, weakly_sharp_odd };

std::string to_string(DesignClass cls);

/// A candidate point in A_{mu,nu} whose full spectrum has exactly m + mu + nu
/// values, i.e. an extremal configuration for the (mu,nu) rule of degree m.
struct ExtremalWitness {
  DesignClass cls = DesignClass::none;
  int m = 0;
  int mu = 0;
  int nu = 0;
  Point point;
  DotSpectrum spectrum;
  /// max |spectrum value - rule node| and max |mass - rule weight|.
  double node_error = 0.0;
  double mass_error = 0.0;
};

struct DesignCertificate {
  int strength = 0;
  int kk_strength = 0;
  DesignClass cls = DesignClass::none;
  /// m in "m-stiff"; design degree 2m or 2m+1 for the weakly sharp classes.
  int class_m = 0;
  int class_degree = 0;
  std::vector<Point> extremal_points;
  std::vector<double> residuals;
  /// Every witness found, for all admissible (mu,nu,m).
  std::vector<ExtremalWitness> witnesses;
};

struct ClassifyOptions {
  double tol = 1e-9;          // Gegenbauer-sum certification
  double cluster_tol = 1e-7;  // dot-product clustering
  double match_tol = 1e-8;    // spectrum vs quadrature comparison
  double member_tol = 1e-9;   // candidate membership in C or -C
  int max_degree = 20;
};

/// Code points, antipodes, +-e_j, +-(1,...,1)/sqrt(n), normalized pairwise
/// midpoints; deduplicated.
std::vector<Point> default_candidates(const WeightedCode& code);

/// Certifies strength and searches the candidates for extremal points.
///
/// Every candidate is also checked against the lower bound on the number of
/// distinct dot products a point of A_{a,b} must form with a (2m+a+b)-design;
/// a violation, or a witness whose spectrum does not reproduce the quadrature
/// nodes and weights, raises InconsistencyError.
DesignCertificate classify(const WeightedCode& code, const std::vector<Point>& candidates,
                           const ClassifyOptions& options = {});

/// Mixture alpha * kappa(a) + (1 - alpha) * kappa(b); points with dot >= 1 - 1e-12 merge.
WeightedCode weighted_union(const WeightedCode& a, const WeightedCode& b, double alpha);

/// C u (-C) with weights alpha * w on C and (1 - alpha) * w on -C.
/// Throws PreconditionError if the code already contains an antipodal pair.
WeightedCode antipodal_double(const WeightedCode& code, double alpha);

}  // namespace spherekit
