#pragma once

#include <functional>
#include <limits>
#include <string>

#include "spherekit/dense_poly.hpp"

namespace spherekit {

/// Scalar potential with exact derivatives of every order.
///
/// Potentials for design bounds live on [-1,1]; the squared potentials of
/// the energy module live on [0,1] and are stored in the same type with a
/// different domain. Values may be +infinity at an endpoint (Riesz-type
/// kernels at t = 1, negative powers at the left end).
class PotentialFunction {
 public:
  using Derivative = std::function<double(int order, double t)>;

  PotentialFunction(std::string name, Derivative deriv, double lo = -1.0, double hi = 1.0);

  const std::string& name() const { return name_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  double operator()(double t) const { return deriv_(0, t); }
  double value(double t) const { return deriv_(0, t); }
  double deriv(int order, double t) const;

  bool finite_at_lo() const;
  bool finite_at_hi() const;

 private:
  std::string name_;
  Derivative deriv_;
  double lo_;
  double hi_;
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace potentials {

/// scale * exp(c t) + offset.
PotentialFunction exponential(double c = 1.0, double scale = 1.0, double offset = 0.0);
/// (a - 2t)^(-s/2) for a >= 2, s > 0; +infinity at t = 1 when a = 2.
PotentialFunction riesz(double a, double s);
PotentialFunction polynomial(const DensePoly& p);
/// (1 + t)^p, p >= 0.
PotentialFunction shifted_power(double p);
/// t^s on [0,1], s > 0; the p-frame kernel is power(p/2).
PotentialFunction power(double s);
PotentialFunction constant(double c);

/// g(t) = f(scale t + shift) on the preimage of f's domain.
PotentialFunction affine_compose(const PotentialFunction& f, double scale, double shift);

/// f viewed on [lo, hi] (a sub-interval of its domain).
PotentialFunction restricted(const PotentialFunction& f, double lo, double hi);

/// g(t) = f((t + 1)/2): a squared potential pulled back to [-1,1].
PotentialFunction induced(const PotentialFunction& f);

/// Parses "name" or "name:key=value,key=value". Recognized names and keys:
/// exp (c), riesz (a, s), shifted_power (p), power (s), constant (c),
/// poly (coeffs separated by ';', ascending). Throws InvalidArgument.
PotentialFunction parse(const std::string& spec);

}  // namespace potentials

enum class SignStatus { strict, nonnegative, violated };

std::string to_string(SignStatus status);

struct SignCheck {
  SignStatus status = SignStatus::strict;
  double min_value = 0.0;
  double witness = 0.0;  // where the minimum was observed
};

/// Samples f^(order) at `samples` Chebyshev points strictly inside f's
/// domain: strict if the minimum exceeds 1e-12, nonnegative if it is at
/// least -1e-12, violated otherwise.
SignCheck derivative_sign_check(const PotentialFunction& f, int order, int samples = 400);
/// Same on the open interval (lo, hi) instead of f's domain.
SignCheck derivative_sign_check(const PotentialFunction& f, int order, int samples, double lo,
                                double hi);

}  // namespace spherekit
