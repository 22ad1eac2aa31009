#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spherekit/bounds.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/energy.hpp"
#include "spherekit/quadrature.hpp"
#include "spherekit/weighted_code.hpp"

namespace spherekit {

using Json = nlohmann::json;

/// Floats as %.17g, keys sorted, two-space indent. Non-finite numbers are
/// written as the strings "inf", "-inf" and "nan".
std::string dump(const Json& value);

/// Aligned two-column text: flattened keys on the left, values with 12
/// significant digits on the right; numeric arrays are space-separated.
std::string table(const Json& value);

/// Number as JSON, with non-finite values mapped to strings.
Json number(double x);

Json to_json(const Point& p);
Json to_json(const WeightedCode& code);
Json to_json(const QuadratureRule& rule);
Json to_json(const DotSpectrum& spectrum);
Json to_json(const DesignCertificate& cert);
Json to_json(const UniversalBound& bound);
Json to_json(const BoundReport& report);
Json to_json(const EnergyBoundReport& report);
Json to_json(const EqualityFlags& flags);

/// {"dim": n, "points": [[...], ...], "weights": [...]}; "weights" may be
/// omitted for equal weights. Throws ParseError naming the first violation,
/// including any WeightedCode invariant.
WeightedCode code_from_json(const Json& value);
WeightedCode read_code(const std::string& path);
void write_code(const std::string& path, const WeightedCode& code);

/// Candidate list file: {"points": [[...], ...]} or a bare array of points.
std::vector<Point> points_from_json(const Json& value, int dim);

}  // namespace spherekit
