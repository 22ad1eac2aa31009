#include "spherekit/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spherekit/errors.hpp"

namespace spherekit::catalog {
namespace {

void require_dim(int n, int min_n, const std::string& name) {
  if (n < min_n)
    throw InvalidArgument(name + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
}

// Vectors (+-1, ..., +-1) / sqrt(n) indexed by bit mask; bit j set means a minus in slot j.
Point sign_vector(int n, unsigned mask) {
  Point p(n);
  for (int j = 0; j < n; ++j) p[j] = (mask >> j) & 1U ? -1.0 : 1.0;
  return p / std::sqrt(static_cast<double>(n));
}

int popcount(unsigned v) { return __builtin_popcount(v); }

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"square_pyramid", "apex (0,0,1) weight 1/4 and (+-2/3,+-2/3,-1/3) weights 3/16", ""},
      {"simplex", "regular simplex, n+1 points, pairwise dot -1/n", "n"},
      {"cross_polytope", "+-e_j, equi-weighted", "n"},
      {"cube", "2^n sign vectors / sqrt(n); optional demicube weights w0 + w1 = 2^(1-n)", "n, w0, w1"},
      {"demihypercube", "sign vectors with an even (parity=0) or odd (parity=1) number of minus signs",
       "n, parity"},
      {"regular_ngon", "N equally spaced points on S^1", "N"},
      {"icosahedron", "12 points (0, +-1, +-phi) and cyclic shifts", ""},
      {"cell24", "24-cell: permutations of (+-1, +-1, 0, 0) / sqrt(2)", ""},
  };
  return all;
}

WeightedCode square_pyramid() {
  std::vector<Point> pts;
  std::vector<double> w;
  pts.push_back(Point::Unit(3, 2));
  w.push_back(1.0 / 4.0);
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      Point p(3);
      p << 2.0 * sx, 2.0 * sy, -1.0;
      pts.push_back(p / 3.0);
      w.push_back(3.0 / 16.0);
    }
  return WeightedCode(3, std::move(pts), std::move(w));
}

WeightedCode simplex(int n) {
  require_dim(n, 2, "simplex");
  // e_i - c(1,...,1) for i < n and -(1,...,1)/sqrt(n+1), with c = (1 - 1/sqrt(n+1)) / n:
  // centered, all norms^2 = n/(n+1).
  const double s = std::sqrt(static_cast<double>(n + 1));
  const double c = (1.0 - 1.0 / s) / n;
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Point p = Point::Constant(n, -c);
    p[i] += 1.0;
    pts.push_back(normalized(p));
  }
  pts.push_back(normalized(Point::Constant(n, -1.0 / s)));
  return WeightedCode::equal_weights(n, std::move(pts));
}

WeightedCode cross_polytope(int n) {
  require_dim(n, 2, "cross_polytope");
  std::vector<Point> pts;
  for (int j = 0; j < n; ++j) {
    pts.push_back(Point::Unit(n, j));
    pts.push_back(-Point::Unit(n, j));
  }
  return WeightedCode::equal_weights(n, std::move(pts));
}

WeightedCode cube(int n) {
  require_dim(n, 2, "cube");
  const double w = std::ldexp(1.0, -n);
  return cube(n, w, w);
}

WeightedCode cube(int n, double w0, double w1) {
  require_dim(n, 2, "cube");
  if (n > 20) throw InvalidArgument("cube: n too large");
  if (!(w0 > 0.0 && w1 > 0.0)) throw InvalidArgument("cube: demicube weights must be positive");
  const double target = std::ldexp(1.0, 1 - n);
  if (std::abs(w0 + w1 - target) > 1e-12 * target)
    throw InvalidArgument("cube: demicube weights must satisfy w0 + w1 = 2^(1-n)");
  std::vector<Point> pts;
  std::vector<double> w;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    pts.push_back(sign_vector(n, mask));
    w.push_back(popcount(mask) % 2 == 0 ? w0 : w1);
  }
  return WeightedCode(n, std::move(pts), std::move(w));
}

WeightedCode demihypercube(int n, int parity) {
  require_dim(n, 3, "demihypercube");
  if (n > 20) throw InvalidArgument("demihypercube: n too large");
  if (parity != 0 && parity != 1) throw InvalidArgument("demihypercube: parity must be 0 or 1");
  std::vector<Point> pts;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (popcount(mask) % 2 == parity) pts.push_back(sign_vector(n, mask));
  return WeightedCode::equal_weights(n, std::move(pts));
}

WeightedCode regular_ngon(int count) {
  if (count < 2) throw InvalidArgument("regular_ngon needs N >= 2");
  std::vector<Point> pts;
  for (int k = 0; k < count; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / count;
    Point p(2);
    p << std::cos(angle), std::sin(angle);
    pts.push_back(normalized(p));
  }
  return WeightedCode::equal_weights(2, std::move(pts));
}

WeightedCode icosahedron() {
  const double phi = std::numbers::phi;
  std::vector<Point> pts;
  for (int shift = 0; shift < 3; ++shift)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        double base[3] = {0.0, 1.0 * s1, phi * s2};
        Point p(3);
        for (int j = 0; j < 3; ++j) p[(j + shift) % 3] = base[j];
        pts.push_back(normalized(p));
      }
  return WeightedCode::equal_weights(3, std::move(pts));
}

WeightedCode cell24() {
  std::vector<Point> pts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Point p = Point::Zero(4);
          p[i] = si;
          p[j] = sj;
          pts.push_back(p / std::sqrt(2.0));
        }
  return WeightedCode::equal_weights(4, std::move(pts));
}

std::pair<std::string, Params> parse_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  std::pair<std::string, Params> out{spec.substr(0, colon), Params{}};
  if (colon == std::string::npos) return out;
  Params& p = out.second;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("catalog spec '" + spec + "': expected key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw InvalidArgument("catalog spec '" + spec + "': '" + key + "' is not a number");
    auto as_int = [&] {
      if (v != std::floor(v)) throw InvalidArgument("catalog spec '" + spec + "': '" + key + "' must be an integer");
      return static_cast<int>(v);
    };
    if (key == "n")
      p.n = as_int();
    else if (key == "N")
      p.count = as_int();
    else if (key == "parity")
      p.parity = as_int();
    else if (key == "w0")
      p.w0 = v;
    else if (key == "w1")
      p.w1 = v;
    else
      throw InvalidArgument("catalog spec '" + spec + "': unknown key '" + key + "'");
  }
  return out;
}

WeightedCode make(const std::string& name, const Params& params) {
  if (name == "square_pyramid") return square_pyramid();
  if (name == "simplex") return simplex(params.n);
  if (name == "cross_polytope") return cross_polytope(params.n);
  if (name == "cube") {
    if (params.w0.has_value() != params.w1.has_value())
      throw InvalidArgument("cube: give both w0 and w1 or neither");
    return params.w0 ? cube(params.n, *params.w0, *params.w1) : cube(params.n);
  }
  if (name == "demihypercube") return demihypercube(params.n, params.parity);
  if (name == "regular_ngon") return regular_ngon(params.count);
  if (name == "icosahedron") return icosahedron();
  if (name == "cell24") return cell24();
  throw InvalidArgument("unknown catalog entry '" + name + "'");
}

Expectation expected(const std::string& name, const Params& params) {
  using C = DesignClass;
  if (name == "square_pyramid") return {2, C::weakly_sharp_even, 1};
  if (name == "simplex") return {2, C::weakly_sharp_even, 1};
  if (name == "cross_polytope") return {3, C::stiff, 2};
  if (name == "cube") return {3, C::stiff, 2};
  if (name == "demihypercube") {
    if (params.n == 3) return {2, C::weakly_sharp_even, 1};
    return {3, C::stiff, 2};
  }
  if (name == "regular_ngon") {
    // N points: (N-1)-design; odd N is weakly sharp even, even N weakly sharp odd.
    const int big_n = params.count;
    if (big_n % 2 == 1) return {big_n - 1, C::weakly_sharp_even, (big_n - 1) / 2};
    return {big_n - 1, C::stiff, big_n / 2};
  }
  if (name == "icosahedron") return {5, C::weakly_sharp_odd, 2};
  if (name == "cell24") return {5, C::stiff, 3};
  throw InvalidArgument("unknown catalog entry '" + name + "'");
}

}  // namespace spherekit::catalog
