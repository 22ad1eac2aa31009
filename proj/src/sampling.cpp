#include "spherekit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "spherekit/errors.hpp"

namespace spherekit {
namespace {

std::vector<unsigned> first_primes(int count) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

double radical_inverse(unsigned long index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

std::vector<Point> sphere_samples(int n, int count) {
  if (n < 2) throw InvalidArgument("sphere_samples: n must be >= 2");
  if (count < 0) throw InvalidArgument("sphere_samples: count must be >= 0");
  const int pairs = (n + 1) / 2;
  const std::vector<unsigned> bases = first_primes(2 * pairs);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; out.size() < static_cast<std::size_t>(count); ++i) {
    Point g(2 * pairs);
    for (int p = 0; p < pairs; ++p) {
      const double u1 = radical_inverse(static_cast<unsigned long>(i), bases[2 * p]);
      const double u2 = radical_inverse(static_cast<unsigned long>(i), bases[2 * p + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      g[2 * p] = r * std::cos(2.0 * std::numbers::pi * u2);
      g[2 * p + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    Point x = g.head(n);
    const double norm = x.norm();
    if (norm < 1e-12) continue;
    out.push_back(x / norm);
  }
  return out;
}

}  // namespace spherekit
