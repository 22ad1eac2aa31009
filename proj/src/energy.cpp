#include "spherekit/energy.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "spherekit/bounds.hpp"
#include "spherekit/designs.hpp"
#include "spherekit/errors.hpp"
#include "spherekit/orthopoly.hpp"
#include "spherekit/parallel.hpp"

namespace spherekit {
namespace {

constexpr double kMemberTol = 1e-8;

double tree_sum(std::span<const double> v) {
  if (v.empty()) return 0.0;
  if (v.size() == 1) return v[0];
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

bool in_nodes(double t, const SymmetricNodeSet& nodes) {
  if (std::abs(std::abs(t) - 1.0) <= kMemberTol) return true;
  return std::any_of(nodes.alpha.begin(), nodes.alpha.end(),
                     [&](double a) { return std::abs(t - a) <= kMemberTol; });
}

int antipode_index(const WeightedCode& code, std::size_t i) {
  for (std::size_t j = 0; j < code.size(); ++j)
    if (j != i && code.point(i).dot(code.point(j)) <= -1.0 + 1e-12) return static_cast<int>(j);
  return -1;
}

std::string text(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

double energy(const WeightedCode& code, const PotentialFunction& f) {
  const std::size_t n = code.size();
  std::vector<double> rows(n);
  parallel_for(n, [&](std::size_t i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double t = i == j ? 1.0 : std::clamp(code.point(i).dot(code.point(j)), -1.0, 1.0);
      row += code.weight(j) * f.value(std::min(t * t, 1.0));
    }
    rows[i] = code.weight(i) * row;
  });
  return tree_sum(rows);
}

double p_frame_energy(const WeightedCode& code, double p) {
  if (!(p > 0.0)) throw InvalidArgument("p_frame_energy: p must be positive");
  return energy(code, potentials::power(p / 2.0));
}

double theta(const WeightedCode& code) {
  double sum = 0.0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int j = antipode_index(code, i);
    sum += code.weight(i) * (code.weight(i) + (j >= 0 ? code.weight(static_cast<std::size_t>(j)) : 0.0));
  }
  return sum;
}

SymmetricNodeSet SymmetricNodeSet::from_alpha(std::vector<double> alpha) {
  if (alpha.empty()) throw InvalidArgument("node set A is empty");
  std::sort(alpha.begin(), alpha.end());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > -1.0 && alpha[i] < 1.0))
      throw InvalidArgument("node set A: " + text(alpha[i]) + " is not in (-1,1)");
    if (i > 0 && alpha[i] - alpha[i - 1] <= 1e-12)
      throw InvalidArgument("node set A: repeated value " + text(alpha[i]));
    if (std::abs(alpha[i] + alpha[alpha.size() - 1 - i]) > 1e-12)
      throw InvalidArgument("node set A is not symmetric about 0 (" + text(alpha[i]) + " has no mirror)");
  }
  SymmetricNodeSet s;
  s.alpha = std::move(alpha);
  s.L = s.m() / 2;
  s.nu = s.m() % 2;
  // alpha_1 < ... < alpha_L < 0 so beta_i = 2 alpha_i^2 - 1 decreases in i.
  for (int i = s.L - 1; i >= 0; --i) s.beta.push_back(2.0 * s.alpha[i] * s.alpha[i] - 1.0);
  return s;
}

SymmetricNodeSet SymmetricNodeSet::parse(const std::string& list) {
  std::vector<double> values;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw InvalidArgument("node set A: cannot parse '" + item + "'");
    values.push_back(v);
  }
  return from_alpha(std::move(values));
}

void check_reference(const WeightedCode& reference, const SymmetricNodeSet& nodes) {
  const int k = nodes.m() - 1;
  const int kk = kk_strength(reference, k);
  if (kk < k)
    throw HypothesisError("reference code is not a (" + std::to_string(k) + "," + std::to_string(k) +
                          ")-design (certified only to k = " + std::to_string(kk) + ")");
  for (std::size_t i = 0; i < reference.size(); ++i)
    for (std::size_t j = i + 1; j < reference.size(); ++j) {
      const double t = reference.point(i).dot(reference.point(j));
      if (!in_nodes(t, nodes))
        throw HypothesisError("reference points " + std::to_string(i) + " and " + std::to_string(j) +
                              " have dot product " + text(t) + ", which is not in A or {-1, 1}");
    }
}

LevenshteinResult levenshtein_polynomial(int n, const SymmetricNodeSet& nodes,
                                         const WeightedCode& reference) {
  if (reference.dim() != n) throw InvalidArgument("levenshtein_polynomial: dimension mismatch");
  check_reference(reference, nodes);
  LevenshteinResult out;
  out.pi = DensePoly::from_roots(nodes.beta);
  if (nodes.L == 0) {
    out.coeffs = {1.0};
    return out;
  }
  out.coeffs = expand_in_family(out.pi, PolyFamily::half_interval(n, 1, nodes.nu));
  out.gamma = out.coeffs[static_cast<std::size_t>(nodes.L - 1)];
  for (int j = 0; j + 2 <= nodes.L; ++j) out.residual = std::max(out.residual, std::abs(out.coeffs[j]));
  if (out.residual >= 1e-9)
    throw HypothesisError("Levenshtein polynomial is not orthogonal to lower degrees (residual " +
                          text(out.residual) + "); A does not match an admissible design");
  if (out.gamma < -1e-10) throw HypothesisError("Levenshtein mixing coefficient is negative: " + text(out.gamma));
  return out;
}

EnergyBoundReport genframe_bound(const WeightedCode& reference, const SymmetricNodeSet& nodes,
                                 const PotentialFunction& f, bool force) {
  const PotentialFunction fu = potentials::restricted(f, 0.0, 1.0);
  EnergyBoundReport out;
  out.n = reference.dim();
  out.m = nodes.m();
  out.L = nodes.L;
  out.nu = nodes.nu;
  out.beta = nodes.beta;

  const LevenshteinResult lev = levenshtein_polynomial(out.n, nodes, reference);
  out.gamma = lev.gamma;
  out.levenshtein_residual = lev.residual;

  for (int k = 1; k <= out.m; ++k) {
    out.sign_checks.push_back(derivative_sign_check(fu, k, 400, 0.0, 1.0));
    if (out.sign_checks.back().status == SignStatus::violated) out.certified = false;
  }
  if (!out.certified && !force) {
    for (std::size_t k = 0; k < out.sign_checks.size(); ++k)
      if (out.sign_checks[k].status == SignStatus::violated)
        throw HypothesisError("derivative of order " + std::to_string(k + 1) + " of " + f.name() +
                              " is negative on (0,1) (" + text(out.sign_checks[k].min_value) +
                              " at t = " + text(out.sign_checks[k].witness) + ")");
  }

  const PotentialFunction g = potentials::induced(fu);
  out.f_at_one = fu.value(1.0);
  if (!std::isfinite(out.f_at_one)) throw DomainError(f.name() + " is not finite at 1");

  std::vector<HermiteNode> knots;
  if (nodes.nu == 1) knots.push_back({-1.0, false});
  for (double b : nodes.beta) knots.push_back({b, true});
  out.p = hermite_interpolant(g, knots);
  out.p_at_one = out.p(1.0);
  out.theta_star = theta(reference);

  if (out.m == 1) {
    // A = {0}: p is the constant g(-1) = f(0) and there are no higher coefficients.
    out.d = {out.p.coeff(0)};
  } else {
    out.d = expand_even_in_gegenbauer(out.p, out.n).coeffs;
    for (std::size_t i = 1; i < out.d.size(); ++i)
      if (out.d[i] < -1e-10)
        throw InconsistencyError("Gegenbauer coefficient d_" + std::to_string(i) + " = " + text(out.d[i]) +
                                 " is negative");
  }
  out.bound = out.d[0] + (out.f_at_one - out.p_at_one) * out.theta_star;
  out.energy_reference = energy(reference, fu);
  out.identity_residual = std::abs(out.bound - out.energy_reference);
  if (out.identity_residual > 1e-9 * std::max(1.0, std::abs(out.energy_reference)))
    throw InconsistencyError("energy bound " + text(out.bound) + " does not reproduce the reference energy " +
                             text(out.energy_reference));
  return out;
}

std::string to_string(EqualityMode mode) {
  switch (mode) {
    case EqualityMode::general:
      return "general";
    case EqualityMode::antipodal:
      return "antipodal";
    case EqualityMode::plain:
      return "plain";
  }
  return "general";
}

EqualityMode parse_mode(const std::string& mode) {
  if (mode == "general") return EqualityMode::general;
  if (mode == "antipodal") return EqualityMode::antipodal;
  if (mode == "plain") return EqualityMode::plain;
  throw InvalidArgument("mode must be general, antipodal or plain, got '" + mode + "'");
}

EqualityFlags check_equality_conditions(const WeightedCode& code, const EnergyBoundReport& reference,
                                        const SymmetricNodeSet& nodes, EqualityMode mode) {
  EqualityFlags flags;
  const int k = nodes.m() - 1;
  flags.design = kk_strength(code, k) >= k;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (i == j) continue;
      if (!in_nodes(code.point(i).dot(code.point(j)), nodes))
        flags.off_a_mass += code.weight(i) * code.weight(j);
    }
  flags.off_a_zero = flags.off_a_mass <= 1e-9;
  flags.theta_match = std::abs(theta(code) - reference.theta_star) <= 1e-9;

  if (mode == EqualityMode::antipodal) {
    bool ok = code.size() % 2 == 0;
    const double target = 2.0 / static_cast<double>(code.size());
    for (std::size_t i = 0; ok && i < code.size(); ++i) {
      const int j = antipode_index(code, i);
      ok = j >= 0 && std::abs(code.weight(i) + code.weight(static_cast<std::size_t>(j)) - target) <= 1e-9;
    }
    flags.pair_totals = ok;
  } else if (mode == EqualityMode::plain) {
    bool ok = true;
    const double target = 1.0 / static_cast<double>(code.size());
    for (std::size_t i = 0; ok && i < code.size(); ++i)
      ok = std::abs(code.weight(i) - target) <= 1e-9 && antipode_index(code, i) < 0;
    flags.plain = ok;
  }
  return flags;
}

}  // namespace spherekit
