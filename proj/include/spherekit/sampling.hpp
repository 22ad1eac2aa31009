#pragma once

#include <vector>

#include "spherekit/weighted_code.hpp"

namespace spherekit {

/// Deterministic quasi-random points on S^{n-1}: Halton sequence in 2n
/// prime bases (first index 1), Box-Muller to Gaussians, normalized.
std::vector<Point> sphere_samples(int n, int count);

/// Radical inverse of index in the given base.
double radical_inverse(unsigned long index, unsigned base);

}  // namespace spherekit
