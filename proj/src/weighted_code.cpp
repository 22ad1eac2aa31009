#include "spherekit/weighted_code.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spherekit/errors.hpp"

namespace spherekit {

Point normalized(Point p) {
  const double norm = p.norm();
  if (norm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return p / norm;
}

WeightedCode::WeightedCode(int dim, std::vector<Point> points, std::vector<double> weights,
                           bool allow_zero_weights)
    : dim_(dim), points_(std::move(points)), weights_(std::move(weights)) {
  auto fail = [](const std::string& what) { throw InvalidArgument("invalid weighted code: " + what); };
  if (dim_ < 2) fail("dimension must be >= 2, got " + std::to_string(dim_));
  if (points_.empty()) fail("code has no points");
  if (points_.size() != weights_.size())
    fail(std::to_string(points_.size()) + " points but " + std::to_string(weights_.size()) + " weights");
  double total = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_)
      fail("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
           " coordinates, expected " + std::to_string(dim_));
    if (!points_[i].allFinite()) fail("point " + std::to_string(i) + " is not finite");
    const double norm = points_[i].norm();
    if (std::abs(norm - 1.0) > 1e-12) {
      std::ostringstream os;
      os.precision(17);
      os << "point " << i << " has norm " << norm << ", expected 1 within 1e-12";
      fail(os.str());
    }
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0 || (w == 0.0 && !allow_zero_weights))
      fail("weight " + std::to_string(i) + " must be positive, got " + std::to_string(w));
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total << ", expected 1 within 1e-12";
    fail(os.str());
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if ((points_[i] - points_[j]).norm() <= 1e-9)
        fail("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

WeightedCode WeightedCode::equal_weights(int dim, std::vector<Point> points) {
  const std::size_t n = points.size();
  std::vector<double> w(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return WeightedCode(dim, std::move(points), std::move(w));
}

Eigen::MatrixXd WeightedCode::gram() const {
  const auto n = static_cast<Eigen::Index>(points_.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = std::clamp(points_[i].dot(points_[j]), -1.0, 1.0);
      g(i, j) = d;
      g(j, i) = d;
    }
  }
  return g;
}

int WeightedCode::find(const Point& z, double tol) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].dot(z) >= 1.0 - tol) return static_cast<int>(i);
  return -1;
}

}  // namespace spherekit
