#include "dualrep/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dualrep/errors.hpp"
#include "dualrep/root_find.hpp"
#include "dualrep/sampling.hpp"

namespace dualrep {
namespace {

struct Candidate {
  double delta = 0.0;
  RealFunction x;
  RealFunction direction;
  RealFunction partner;
};

double midpoint_depth(const SpaceModel& model, const RealFunction& x, const RealFunction& y) {
  return 1.0 - norm(model, 0.5 * (x + y));
}

Candidate evaluate(const SpaceModel& model, RealFunction x, RealFunction direction, double epsilon) {
  x *= 1.0 / norm(model, x);
  RealFunction partner = boundary_partner(model, x, direction, epsilon);
  const double delta = midpoint_depth(model, x, partner);
  return {delta, std::move(x), std::move(direction), std::move(partner)};
}

RealFunction unit(const SpaceModel& model, RealFunction f) {
  f *= 1.0 / norm(model, f);
  return f;
}

}  // namespace

RealFunction boundary_partner(const SpaceModel& model, const RealFunction& x,
                              const RealFunction& direction, double epsilon) {
  const auto weights = model.space().weights();
  // Gram-Schmidt against x in the weighted Euclidean product, then scale to
  // unit model norm; any independent direction spans the same circle.
  const double xx = weighted_dot(x.values(), x.values(), weights);
  const double xd = weighted_dot(x.values(), direction.values(), weights);
  RealFunction d = direction - (xd / xx) * x;
  const double dn = norm(model, d);
  if (!(dn > 1e-12 * norm(model, direction))) {
    raise(ErrorKind::kDomain, "boundary_partner: direction is parallel to x");
  }
  d *= 1.0 / dn;

  const auto partner_at = [&](double theta) {
    return unit(model, std::cos(theta) * x + std::sin(theta) * d);
  };
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm(model, x - partner_at(mid)) < epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // hi keeps |x - y| >= eps (up to the norm's own rounding).
  return partner_at(hi);
}

ConvexityModulus modulus_estimate(const SpaceModel& model, double epsilon, int samples,
                                  std::uint64_t seed) {
  if (epsilon > 2.0) raise(ErrorKind::kInfeasible, "no unit pair is farther apart than 2");
  if (!(epsilon > 0.0)) raise(ErrorKind::kDomain, "modulus_estimate needs eps > 0");
  if (samples < 1) raise(ErrorKind::kDomain, "modulus_estimate needs samples >= 1");

  const std::size_t n = model.dimension();
  if (n < 2) raise(ErrorKind::kDomain, "modulus_estimate needs at least two atoms");
  Rng rng = make_rng(seed);
  std::vector<Candidate> pool;
  pool.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    pool.push_back(evaluate(model, random_function(rng, n), random_function(rng, n), epsilon));
  }
  const std::size_t keep = std::min<std::size_t>(8, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep), pool.end(),
                    [](const Candidate& a, const Candidate& b) { return a.delta < b.delta; });
  pool.resize(keep);

  ConvexityModulus out;
  out.epsilon = epsilon;
  out.samples = samples;
  for (Candidate& c : pool) {
    double radius = 0.25;
    for (int it = 0; it < 80 && radius > 1e-7; ++it) {
      RealFunction x = c.x + radius * random_function(rng, n);
      RealFunction d = c.direction + radius * random_function(rng, n);
      Candidate next = evaluate(model, std::move(x), std::move(d), epsilon);
      ++out.refinements;
      if (next.delta < c.delta) {
        c = std::move(next);
        radius *= 1.5;
      } else {
        radius *= 0.6;
      }
    }
  }
  const auto best = std::min_element(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    return a.delta < b.delta;
  });
  out.delta_estimate = best->delta;
  out.x = best->x;
  out.y = best->partner;
  return out;
}

SequenceDiagnostics maximizing_sequence_experiment(const SpaceModel& model, const DualFunctional& y,
                                                   int steps, std::uint64_t seed) {
  if (steps < 1) raise(ErrorKind::kDomain, "maximizing sequence needs steps >= 1");
  double scale = 0.0;
  SequenceDiagnostics out;
  out.maximizer = duality_point(model, y, &scale);
  const DualFunctional y_hat = (1.0 / scale) * y;
  const RealFunction& m = out.maximizer;
  const MeasureSpace& space = model.space();
  const std::size_t n = model.dimension();
  Rng rng = make_rng(seed);

  const auto gap_of = [&](const RealFunction& x) { return 1.0 - pairing(space, y_hat, x); };
  const auto kernel_direction = [&] {
    RealFunction d = random_function(rng, n);
    d -= pairing(space, y_hat, d) * m;
    return d;
  };

  // pairing(y_hat, m + t d) = 1, so gap = 1 - 1 / |m + t d|.
  const auto step_for = [&](const RealFunction& d, double target) {
    return solve_monotone([&](double t) { return norm(model, m + t * d); }, 1.0 / (1.0 - target),
                          std::sqrt(target), Monotonicity::kIncreasing)
        .root;
  };
  constexpr double kSolvable = 1e-12;
  for (int step = 1; step <= steps; ++step) {
    const double target = std::ldexp(1.0, -step);
    RealFunction x;
    bool placed = false;
    if (target >= kSolvable && step % 2 == 0) {
      double radius = std::sqrt(target);
      for (int attempt = 0; attempt < 200 && !placed; ++attempt, radius *= 0.5) {
        RealFunction z = unit(model, m + radius * random_function(rng, n));
        if (gap_of(z) <= target) {
          x = std::move(z);
          placed = true;
        }
      }
    }
    if (!placed) {
      const RealFunction d = kernel_direction();
      if (d.is_zero() || n == 1) {
        x = m;
      } else if (target >= kSolvable) {
        x = unit(model, m + step_for(d, target) * d);
      } else {
        // Below the solvable level the gap follows t^2 along d.
        x = unit(model, m + step_for(d, kSolvable) * std::sqrt(target / kSolvable) * d);
      }
    }
    out.gaps.push_back(gap_of(x));
    out.distances_to_maximizer.push_back(norm(model, x - m));
    out.points.push_back(std::move(x));
  }

  const std::size_t count = out.points.size();
  out.tail_diameters.assign(count, 0.0);
  out.midpoint_margin = std::numeric_limits<double>::infinity();
  for (std::size_t a = count; a-- > 0;) {
    double row = 0.0;
    for (std::size_t b = a + 1; b < count; ++b) {
      row = std::max(row, norm(model, out.points[a] - out.points[b]));
      const RealFunction mid = 0.5 * (out.points[a] + out.points[b]);
      out.midpoint_margin = std::min(out.midpoint_margin, norm(model, mid) - pairing(space, y_hat, mid));
    }
    out.tail_diameters[a] = std::max(row, a + 1 < count ? out.tail_diameters[a + 1] : 0.0);
  }
  if (count < 2) out.midpoint_margin = 0.0;
  return out;
}

std::vector<ContinuityRow> m_continuity_probe(const SpaceModel& model, const DualFunctional& y,
                                              std::span<const double> sizes, std::uint64_t seed,
                                              int samples_per_size) {
  const RealFunction base = duality_point(model, y);
  Rng rng = make_rng(seed);
  std::vector<ContinuityRow> rows;
  for (double size : sizes) {
    if (size < 0.0) raise(ErrorKind::kDomain, "perturbation sizes must be nonnegative");
    ContinuityRow row;
    row.size = size;
    if (size > 0.0) {
      for (int s = 0; s < samples_per_size; ++s) {
        DualFunctional delta = random_unit_functional(model, rng);
        delta *= size;
        const DualFunctional moved = y + delta;
        if (moved.is_zero()) continue;
        const double displacement = norm(model, duality_point(model, moved) - base);
        row.max_displacement = std::max(row.max_displacement, displacement);
        row.mean_displacement += displacement;
        ++row.samples;
      }
      if (row.samples > 0) row.mean_displacement /= row.samples;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dualrep
