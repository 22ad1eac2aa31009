#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

namespace spherekit {

using Point = Eigen::VectorXd;

/// Scales p to unit length.
Point normalized(Point p);

/// N distinct unit vectors in R^n with positive weights summing to 1,
/// i.e. the discrete probability measure sum_i w_i delta_{x_i}.
///
/// Invariants are checked on construction: |x_i| = 1 within 1e-12, pairwise
/// chordal distance > 1e-9, sum w_i = 1 within 1e-12, w_i > 0. Zero weights
/// are accepted only when `allow_zero_weights` is set (used for augmenting a
/// code with weightless antipodes).
class WeightedCode {
 public:
  WeightedCode(int dim, std::vector<Point> points, std::vector<double> weights,
               bool allow_zero_weights = false);

  static WeightedCode equal_weights(int dim, std::vector<Point> points);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Matrix of pairwise dot products, clamped to [-1, 1].
  Eigen::MatrixXd gram() const;

  /// Index of the code point within `tol` (dot >= 1 - tol) of z, or -1.
  int find(const Point& z, double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<Point> points_;
  std::vector<double> weights_;
};

}  // namespace spherekit
