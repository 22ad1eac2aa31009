#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherekit/dense_poly.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/potential.hpp"
#include "spherekit/quadrature.hpp"
#include "spherekit/weighted_code.hpp"

namespace spherekit {

enum class BoundSide { lower, upper };

std::string to_string(BoundSide side);
BoundSide parse_side(const std::string& text);

/// Interpolation condition: f(z), and f'(z) as well when `slope` is set.
struct HermiteNode {
  double z = 0.0;
  bool slope = false;
};

/// Hermite interpolant of degree (number of conditions - 1) by confluent
/// divided differences; nodes must be distinct. Throws DomainError if a
/// required value or slope of f is not finite.
DensePoly hermite_interpolant(const PotentialFunction& f, const std::vector<HermiteNode>& nodes);

/// Interpolates f and f' at the interior nodes of the rule and f alone at
/// the endpoint nodes; degree 2m - 1 + mu + nu. Confluent divided differences.
/// Throws DomainError if f is not finite at a node.
DensePoly hermite_interpolant(const PotentialFunction& f, const QuadratureRule& rule);

/// Derivative order whose sign the bound needs: 2m + nu (lower), 2m + 1 + nu (upper).
int required_derivative_order(BoundSide side, int m, int nu);
/// Design strength the bound needs: 2m - 1 + nu (lower), 2m + nu (upper).
int required_strength(BoundSide side, int m, int nu);

struct UniversalBound {
  BoundSide side = BoundSide::lower;
  QuadratureRule rule;  // mu = 0 for lower, 1 for upper
  double value = 0.0;   // sum_j tau_j f(lambda_j)
  bool certified = false;
  SignCheck sign;
  /// |sum_j tau_j q(lambda_j) - integral of q w_n| for the Hermite interpolant q.
  double identity_residual = 0.0;
};

/// sum_j tau_j f(lambda_j) over the (n, m, mu, nu) rule with mu = 0 for the
/// lower bound and mu = 1 for the upper bound.
///
/// The derivative hypothesis is checked by sampling; a violation raises
/// HypothesisError unless `force` is set, in which case the value is
/// returned with certified = false.
UniversalBound universal_bound(int n, int m, int nu, BoundSide side, const PotentialFunction& f,
                               bool force = false);

/// U_f(x) = sum_i w_i f(x . x_i); +infinity if any term is infinite.
double potential(const Point& x, const WeightedCode& code, const PotentialFunction& f);

struct AttainingPoint {
  Point point;
  bool from_candidates = true;
  double value = 0.0;
  double gap = 0.0;
  DotSpectrum spectrum;
  /// Spectrum reproduces the rule's nodes and weights within 1e-8.
  bool matches_rule = false;
  double node_error = 0.0;
  double mass_error = 0.0;
};

struct CandidateValue {
  Point point;
  double value = 0.0;
  double gap = 0.0;  // value - bound; +infinity for infinite potentials
};

struct BoundReport {
  UniversalBound bound;
  std::vector<CandidateValue> candidates;
  std::vector<AttainingPoint> attaining;
  int samples = 0;
  int skipped_infinite = 0;
  double min_value = 0.0;  // over finite candidate and sample values
  double max_value = 0.0;
  /// Every finite gap has the predicted sign (within 1e-9).
  bool respected = true;
};

struct AttainmentOptions {
  int samples = 1000;
  double attain_tol = 1e-8;
  double cluster_tol = 1e-7;
  double design_tol = 1e-9;
  bool force = false;
};

/// Evaluates U_f at the candidates and at quasi-random sphere points and
/// reports where the bound is attained. Throws PreconditionError if the code
/// is not certified to the strength the chosen bound requires.
BoundReport attainment_report(const WeightedCode& code, int m, int nu, BoundSide side,
                              const PotentialFunction& f, const std::vector<Point>& candidates,
                              const AttainmentOptions& options = {});

/// Largest m (and matching nu) for which the code's strength supports the bound:
/// lower needs 2m - 1 + nu, upper needs 2m + nu. Returns m = 0 if none.
std::pair<int, int> bound_parameters(int strength, BoundSide side);

struct CurvePoint {
  double param = 0.0;  // arc length from the start point
  double value = 0.0;
  double bound = 0.0;
};

/// U_f sampled along the half great circle from `start` to -start through
/// `direction` (made orthogonal to start), at steps + 1 equally spaced angles.
std::vector<CurvePoint> potential_curve(const WeightedCode& code, const PotentialFunction& f,
                                        const Point& start, const Point& direction, int steps,
                                        double bound);

}  // namespace spherekit
