#include "dualrep/young.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "dualrep/errors.hpp"

namespace dualrep {
namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int k = 0; k < points; ++k) {
    grid[static_cast<std::size_t>(k)] =
        points == 1 ? hi : std::exp(a + (b - a) * static_cast<double>(k) / (points - 1));
  }
  grid.back() = hi;
  return grid;
}

std::string format_parameter(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1e-300, std::abs(a), std::abs(b)});
}

}  // namespace

Admissibility check_admissible(const ScalarFunction& value, const ScalarFunction& derivative) {
  Admissibility out;
  const std::vector<double> grid = log_grid(1e-6, 1e6, 64);

  out.vanishes_at_zero = std::abs(value(0.0)) <= 1e-300;
  if (!out.vanishes_at_zero) out.failure = "P(0) != 0";

  out.even = std::all_of(grid.begin(), grid.end(),
                         [&](double u) { return close_rel(value(-u), value(u), 1e-12); });
  if (!out.even && out.failure.empty()) out.failure = "P is not even";

  out.convex = true;
  for (std::size_t i = 0; i < grid.size() && out.convex; ++i) {
    for (std::size_t j = i; j < grid.size(); j += 3) {
      for (double sj : {1.0, -1.0}) {
        const double a = grid[i];
        const double b = sj * grid[j];
        const double mid = value(0.5 * (a + b));
        const double chord = 0.5 * (value(a) + value(b));
        if (mid > chord * (1.0 + 1e-12) + 1e-300) {
          out.convex = false;
          break;
        }
      }
      if (!out.convex) break;
    }
  }
  if (!out.convex && out.failure.empty()) out.failure = "midpoint convexity violated";

  // P(u)/u along decreasing and increasing decades.
  std::array<double, 8> small{};
  std::array<double, 8> large{};
  for (int k = 0; k < 8; ++k) {
    const double us = std::pow(10.0, -(k + 1));
    const double ul = std::pow(10.0, k + 1);
    small[static_cast<std::size_t>(k)] = value(us) / us;
    large[static_cast<std::size_t>(k)] = value(ul) / ul;
  }
  out.superlinear_at_zero = small.back() < small.front();
  out.superlinear_at_infinity = large.back() > large.front();
  for (std::size_t k = 1; k < 8; ++k) {
    if (small[k] > small[k - 1] * (1.0 + 1e-12)) out.superlinear_at_zero = false;
    if (large[k] < large[k - 1] * (1.0 - 1e-12)) out.superlinear_at_infinity = false;
  }
  if (!out.superlinear_at_zero && out.failure.empty()) out.failure = "P(u)/u does not vanish at 0";
  if (!out.superlinear_at_infinity && out.failure.empty()) {
    out.failure = "P(u)/u does not blow up at infinity";
  }

  out.derivative_monotone = derivative(0.0) == 0.0;
  out.derivative_strictly_increasing = out.derivative_monotone;
  double previous = 0.0;
  for (double u : grid) {
    const double d = derivative(u);
    if (!close_rel(derivative(-u), -d, 1e-12)) out.derivative_monotone = false;
    if (d < previous) out.derivative_monotone = false;
    if (!(d > previous)) out.derivative_strictly_increasing = false;
    previous = d;
  }
  if (!out.derivative_monotone) out.derivative_strictly_increasing = false;
  if (!out.derivative_monotone && out.failure.empty()) {
    out.failure = "P' is not odd and nondecreasing";
  }
  return out;
}

YoungFunction::YoungFunction(std::string label, ScalarFunction value, ScalarFunction derivative,
                             ScalarFunction derivative_inverse,
                             std::optional<PowerParameters> power)
    : label_(std::move(label)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      derivative_inverse_(std::move(derivative_inverse)),
      power_(power) {
  if (!value_ || !derivative_) raise(ErrorKind::kDomain, "Young function needs P and P'");
  admissibility_ = check_admissible(value_, derivative_);
}

double YoungFunction::derivative_inverse(double s) const {
  if (s == 0.0) return 0.0;
  if (derivative_inverse_) return derivative_inverse_(s);
  // Full precision: nested solves (Orlicz norm, duality map) otherwise see a
  // staircase in lambda at the 1e-13 level.
  RootOptions options;
  options.relative_width = 0.0;
  const RootResult r = invert_increasing(derivative_, std::abs(s), options);
  return sign(s) * r.root;
}

double YoungFunction::inverse(double t) const {
  if (t < 0.0) raise(ErrorKind::kDomain, "P^{-1} needs t >= 0");
  if (t == 0.0) return 0.0;
  RootOptions options;
  options.relative_width = 0.0;
  return invert_increasing(value_, t, options).root;
}

YoungFunction power_young(double p, bool normalized) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorKind::kDomain, "power Young function needs p > 1");
  const double c = normalized ? 1.0 / p : 1.0;
  const double dc = normalized ? 1.0 : p;
  auto value = [p, c](double u) { return c * std::pow(std::abs(u), p); };
  auto derivative = [p, dc](double u) { return dc * std::pow(std::abs(u), p - 1.0) * sign(u); };
  auto derivative_inverse = [p, dc](double s) {
    return std::pow(std::abs(s) / dc, 1.0 / (p - 1.0)) * sign(s);
  };
  std::string label = normalized ? "|u|^p/p" : "|u|^p";
  label += " (p=" + format_parameter(p) + ")";
  return YoungFunction(std::move(label), value, derivative, derivative_inverse,
                       PowerParameters{p, normalized});
}

YoungFunction power_sum_young(double p, double r) {
  if (!(p > 1.0) || !(r > 1.0) || !std::isfinite(p) || !std::isfinite(r)) {
    raise(ErrorKind::kDomain, "power-sum Young function needs p, r > 1");
  }
  auto value = [p, r](double u) {
    const double a = std::abs(u);
    return std::pow(a, p) / p + std::pow(a, r) / r;
  };
  auto derivative = [p, r](double u) {
    const double a = std::abs(u);
    return (std::pow(a, p - 1.0) + std::pow(a, r - 1.0)) * sign(u);
  };
  return YoungFunction("|u|^p/p + |u|^r/r (p=" + format_parameter(p) + ", r=" + format_parameter(r) + ")",
                       value, derivative);
}

YoungFunction conjugate_young(const YoungFunction& young) {
  auto value = [young](double v) { return conjugate(young, v); };
  auto derivative = [young](double v) { return young.derivative_inverse(v); };
  auto derivative_inverse = [young](double s) { return young.derivative(s); };
  return YoungFunction("conj(" + young.label() + ")", value, derivative, derivative_inverse);
}

ConjugateSolve conjugate_solve(const YoungFunction& young, double v) {
  const double a = std::abs(v);
  if (a == 0.0) return {};
  RootOptions options;
  options.relative_width = 1e-13;
  options.overflow_bound = 1e200;
  options.failure_kind = ErrorKind::kUnboundedConjugate;
  const RootResult r =
      invert_increasing([&](double u) { return young.derivative(u); }, a, options);
  const double value = std::max(0.0, r.root * a - young(r.root));
  return {value, r.root, r.iterations};
}

double conjugate(const YoungFunction& young, double v) { return conjugate_solve(young, v).value; }

double delta2_constant(const YoungFunction& young, double u_max, int grid) {
  if (!(u_max > 0.0)) raise(ErrorKind::kDomain, "delta2_constant needs u_max > 0");
  if (grid < 2) raise(ErrorKind::kDomain, "delta2_constant needs at least 2 grid points");
  const double lo = std::min(1e-6, u_max);
  double alpha = 0.0;
  for (double u : log_grid(lo, u_max, grid)) {
    const double pu = young(u);
    if (!(pu > 0.0)) raise(ErrorKind::kDegenerateYoung, "P(u) = 0 at u = " + std::to_string(u));
    alpha = std::max(alpha, young(2.0 * u) / pu);
  }
  return alpha;
}

double rho_estimate(const YoungFunction& young, double epsilon, int grid, int scale_levels) {
  if (!(epsilon > 0.0) || epsilon > 1.0) raise(ErrorKind::kDomain, "rho_estimate needs 0 < eps <= 1");
  if (grid < 4 || scale_levels < 1) raise(ErrorKind::kDomain, "rho_estimate grid too small");

  // Points of the diamond |u| + |v| = 1, vertices included, plus the four
  // points where the feasibility constraint is active.
  std::vector<std::array<double, 2>> diamond;
  diamond.reserve(static_cast<std::size_t>(grid) + 8);
  for (int k = 0; k < grid; ++k) {
    const double t = 4.0 * static_cast<double>(k) / grid;
    const int side = std::min(3, static_cast<int>(t));
    const double s = t - side;
    switch (side) {
      case 0: diamond.push_back({1.0 - s, s}); break;
      case 1: diamond.push_back({-s, 1.0 - s}); break;
      case 2: diamond.push_back({s - 1.0, -s}); break;
      default: diamond.push_back({s, s - 1.0}); break;
    }
  }
  const double a = 0.5 * (1.0 + epsilon);
  const double b = 0.5 * (1.0 - epsilon);
  for (const auto& pt : {std::array{a, b}, std::array{b, a}, std::array{-a, -b}, std::array{-b, -a}}) {
    diamond.push_back(pt);
  }

  double best = std::numeric_limits<double>::infinity();
  for (int level = 0; level < scale_levels; ++level) {
    const double scale = std::exp2(static_cast<double>(level) - 0.5 * (scale_levels - 1));
    for (const auto& pt : diamond) {
      const double u = scale * pt[0];
      const double v = scale * pt[1];
      // Boundary points are feasible up to rounding in their construction.
      if (std::abs(u - v) < epsilon * (std::abs(u) + std::abs(v)) * (1.0 - 1e-14)) continue;
      const double avg = 0.5 * (young(u) + young(v));
      if (!(avg > 0.0)) continue;
      const double gap = avg - young(0.5 * (u + v));
      best = std::min(best, gap / avg);
    }
  }
  if (!std::isfinite(best)) raise(ErrorKind::kInfeasible, "no feasible pair sampled");
  return std::clamp(best, 0.0, 1.0);
}

double mcshane_check(const YoungFunction& young, double epsilon, double rho, double u, double v) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) raise(ErrorKind::kDomain, "mcshane_check needs 0 < eps < 1");
  if (!(rho > 0.0 && rho <= 1.0)) raise(ErrorKind::kDomain, "mcshane_check needs 0 < rho <= 1");
  const double avg = 0.5 * (young(u) + young(v));
  const double gap = avg - young(0.5 * (u + v));
  const double lhs = young(0.5 * (u - v));
  return epsilon * avg + gap / rho - lhs;
}

}  // namespace dualrep
