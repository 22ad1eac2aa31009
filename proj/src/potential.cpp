#include "spherekit/potential.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "spherekit/errors.hpp"

namespace spherekit {

PotentialFunction::PotentialFunction(std::string name, Derivative deriv, double lo, double hi)
    : name_(std::move(name)), deriv_(std::move(deriv)), lo_(lo), hi_(hi) {
  if (!(lo < hi)) throw InvalidArgument("potential domain must satisfy lo < hi");
}

double PotentialFunction::deriv(int order, double t) const {
  if (order < 0) throw InvalidArgument("derivative order must be >= 0");
  return deriv_(order, t);
}

bool PotentialFunction::finite_at_lo() const { return std::isfinite(deriv_(0, lo_)); }
bool PotentialFunction::finite_at_hi() const { return std::isfinite(deriv_(0, hi_)); }

namespace {

// x(x-1)...(x-k+1)
double falling(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

// x(x+1)...(x+k-1)
double rising(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

// k-th derivative of u^p at u >= 0; +infinity where the power blows up.
double power_derivative(double p, int k, double u) {
  const double coef = falling(p, k);
  if (coef == 0.0) return 0.0;
  const double e = p - k;
  if (u == 0.0) {
    if (e > 0.0) return 0.0;
    if (e == 0.0) return coef;
    return coef > 0.0 ? kInfinity : -kInfinity;
  }
  return coef * std::pow(u, e);
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

namespace potentials {

PotentialFunction exponential(double c, double scale, double offset) {
  std::string name = "exp(" + num(c) + "t)";
  if (scale != 1.0) name = num(scale) + "*" + name;
  if (offset != 0.0) name += (offset > 0 ? "+" : "") + num(offset);
  return PotentialFunction(name, [=](int k, double t) {
    const double v = scale * std::pow(c, k) * std::exp(c * t);
    return k == 0 ? v + offset : v;
  });
}

PotentialFunction riesz(double a, double s) {
  if (!(a >= 2.0)) throw InvalidArgument("riesz: need a >= 2 so that a - 2t >= 0 on [-1,1]");
  if (!(s > 0.0)) throw InvalidArgument("riesz: need s > 0");
  const double r = s / 2.0;
  return PotentialFunction("(" + num(a) + "-2t)^(-" + num(s) + "/2)", [=](int k, double t) {
    const double base = a - 2.0 * t;
    if (base <= 0.0) return kInfinity;
    return std::ldexp(rising(r, k), k) * std::pow(base, -r - k);
  });
}

PotentialFunction polynomial(const DensePoly& p) {
  std::ostringstream os;
  os.precision(12);
  os << "poly[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ";" : "") << p.coeffs()[i];
  os << "]";
  // Derivatives cached up to the degree; higher orders vanish.
  std::vector<DensePoly> ds{p};
  while (ds.back().degree() > 0) ds.push_back(ds.back().derivative());
  return PotentialFunction(os.str(), [ds = std::move(ds)](int k, double t) {
    return k < static_cast<int>(ds.size()) ? ds[k](t) : 0.0;
  });
}

PotentialFunction shifted_power(double p) {
  if (!(p >= 0.0)) throw InvalidArgument("shifted_power: need p >= 0");
  return PotentialFunction("(1+t)^" + num(p), [=](int k, double t) {
    return power_derivative(p, k, std::max(1.0 + t, 0.0));
  });
}

PotentialFunction power(double s) {
  if (!(s > 0.0)) throw InvalidArgument("power: need s > 0");
  return PotentialFunction(
      "t^" + num(s), [=](int k, double t) { return power_derivative(s, k, std::max(t, 0.0)); }, 0.0,
      1.0);
}

PotentialFunction constant(double c) {
  return PotentialFunction(num(c), [=](int k, double) { return k == 0 ? c : 0.0; });
}

PotentialFunction affine_compose(const PotentialFunction& f, double scale, double shift) {
  if (scale == 0.0) throw InvalidArgument("affine_compose: scale must be nonzero");
  double lo = (f.lo() - shift) / scale;
  double hi = (f.hi() - shift) / scale;
  if (lo > hi) std::swap(lo, hi);
  return PotentialFunction(
      f.name() + "(" + num(scale) + "t+" + num(shift) + ")",
      [=](int k, double t) { return std::pow(scale, k) * f.deriv(k, scale * t + shift); }, lo, hi);
}

PotentialFunction restricted(const PotentialFunction& f, double lo, double hi) {
  if (lo < f.lo() || hi > f.hi() || !(lo < hi))
    throw InvalidArgument("restricted: [lo, hi] must be a sub-interval of the domain of " + f.name());
  return PotentialFunction(f.name(), [f](int k, double t) { return f.deriv(k, t); }, lo, hi);
}

PotentialFunction induced(const PotentialFunction& f) { return affine_compose(f, 0.5, 0.5); }

PotentialFunction parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw InvalidArgument("potential '" + spec + "': expected key=value, got '" + item + "'");
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto number = [&](const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size() || it->second.empty())
      throw InvalidArgument("potential '" + spec + "': '" + key + "' is not a number");
    kv.erase(it);
    return v;
  };
  auto finish = [&](PotentialFunction f) {
    if (!kv.empty()) throw InvalidArgument("potential '" + spec + "': unknown key '" + kv.begin()->first + "'");
    return f;
  };

  if (name == "exp") {
    const double c = number("c", 1.0);
    const double scale = number("scale", 1.0);
    const double offset = number("offset", 0.0);
    return finish(exponential(c, scale, offset));
  }
  if (name == "riesz") {
    const double a = number("a", 2.4);
    const double s = number("s", 1.0);
    return finish(riesz(a, s));
  }
  if (name == "shifted_power") return finish(shifted_power(number("p", 2.0)));
  if (name == "power") return finish(power(number("s", 1.0)));
  if (name == "constant") return finish(constant(number("c", 1.0)));
  if (name == "poly") {
    auto it = kv.find("coeffs");
    if (it == kv.end()) throw InvalidArgument("potential '" + spec + "': poly needs coeffs=c0;c1;...");
    std::vector<double> coeffs;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ';')) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidArgument("potential '" + spec + "': bad coefficient '" + item + "'");
      }
    }
    kv.erase(it);
    return finish(polynomial(DensePoly(std::move(coeffs))));
  }
  throw InvalidArgument("unknown potential family '" + name +
                        "' (expected exp, riesz, shifted_power, power, constant, poly)");
}

}  // namespace potentials

std::string to_string(SignStatus status) {
  switch (status) {
    case SignStatus::strict:
      return "strict";
    case SignStatus::nonnegative:
      return "nonnegative";
    case SignStatus::violated:
      return "violated";
  }
  return "violated";
}

SignCheck derivative_sign_check(const PotentialFunction& f, int order, int samples) {
  return derivative_sign_check(f, order, samples, f.lo(), f.hi());
}

SignCheck derivative_sign_check(const PotentialFunction& f, int order, int samples, double lo,
                                double hi) {
  if (order < 0) throw InvalidArgument("derivative_sign_check: order must be >= 0");
  if (samples < 1) throw InvalidArgument("derivative_sign_check: need at least one sample");
  SignCheck out;
  out.min_value = kInfinity;
  if (!(lo < hi)) throw InvalidArgument("derivative_sign_check: need lo < hi");
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < samples; ++i) {
    const double t = mid + half * std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * samples));
    double v = f.deriv(order, t);
    if (std::isnan(v)) v = -kInfinity;
    if (v < out.min_value) {
      out.min_value = v;
      out.witness = t;
    }
  }
  if (out.min_value > 1e-12)
    out.status = SignStatus::strict;
  else if (out.min_value >= -1e-12)
    out.status = SignStatus::nonnegative;
  else
    out.status = SignStatus::violated;
  return out;
}

}  // namespace spherekit
