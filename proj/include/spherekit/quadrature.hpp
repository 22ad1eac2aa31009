#pragma once

#include <vector>

namespace spherekit {

/// Gauss-type rule for integral of p(t) w_n(t) dt on [-1,1].
///
/// Interior nodes are the roots of the adjacent polynomial P_m^{mu,nu}; the
/// endpoint 1 is a node iff mu = 1 and -1 is a node iff nu = 1. The rule is
/// exact for polynomials of degree <= exactness_degree = 2m - 1 + mu + nu.
struct QuadratureRule {
  int n = 3;
  int m = 1;
  int mu = 0;
  int nu = 0;
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // same indexing as nodes
  int exactness_degree = 1;
};

/// Weights come from integrating the squared-Lagrange polynomials R_j
/// against exact moments of w_n, so positivity is structural.
/// Throws UnsupportedParameters for m < 1, InvalidArgument for bad n/mu/nu,
/// InconsistencyError if a weight comes out non-positive.
QuadratureRule build_rule(int n, int m, int mu, int nu);

/// max over k = 0..degree of |sum_j tau_j lambda_j^k - mu_k|.
double exactness_residual(const QuadratureRule& rule, int degree);

}  // namespace spherekit
