#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherekit/designs.hpp"
#include "spherekit/weighted_code.hpp"

namespace spherekit::catalog {

/// Parameters for the named constructions; unused fields are ignored.
struct Params {
  int n = 3;       // ambient dimension
  int count = 0;   // polygon size for regular_ngon
  int parity = 0;  // demihypercube: 0 = even number of minus signs, 1 = odd
  // cube: per-point weights of the even and odd demicubes; unset means equal weights.
  std::optional<double> w0;
  std::optional<double> w1;
};

struct Entry {
  std::string name;
  std::string summary;
  std::string params;  // human-readable parameter list
};

const std::vector<Entry>& entries();

/// Splits "name" or "name:key=value,..." (keys n, N, parity, w0, w1).
/// Throws InvalidArgument on unknown keys or malformed values.
std::pair<std::string, Params> parse_spec(const std::string& spec);

/// Builds a named configuration from integer/surd formulas, normalized once.
/// Throws InvalidArgument on unknown names or invalid parameters.
WeightedCode make(const std::string& name, const Params& params = {});

WeightedCode square_pyramid();
WeightedCode simplex(int n);
WeightedCode cross_polytope(int n);
WeightedCode cube(int n);
WeightedCode cube(int n, double w0, double w1);
WeightedCode demihypercube(int n, int parity);
WeightedCode regular_ngon(int count);
WeightedCode icosahedron();
WeightedCode cell24();

/// Strength and class each entry is expected to certify with default candidates.
struct Expectation {
  int strength;
  DesignClass cls;
  int class_m;
};
Expectation expected(const std::string& name, const Params& params = {});

}  // namespace spherekit::catalog
