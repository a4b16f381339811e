// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dualrep/convexity.hpp"
#include "dualrep/duality.hpp"
#include "dualrep/errors.hpp"
#include "dualrep/extension.hpp"
#include "dualrep/sampling.hpp"
#include "dualrep/young.hpp"
#include "oracles.hpp"

using namespace dualrep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* spec, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, a);
  return buf;
}

std::string sci(double a) { return fmt("%.3e", a); }

std::vector<SpaceModel> duality_models(MeasureSpace space) {
  std::vector<SpaceModel> models;
  models.push_back(SpaceModel::hilbert(space));
  for (double p : {1.5, 2.0, 3.0, 4.0}) models.push_back(SpaceModel::lebesgue(space, p));
  for (double p : {1.5, 2.0, 3.0, 4.0}) models.push_back(SpaceModel::orlicz(space, power_young(p, false)));
  return models;
}

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Outcome duality_round_trip() {
  Rng rng = make_rng(101);
  double worst_a = 0.0;
  double worst_b = 0.0;
  for (std::size_t n : {2u, 8u, 64u}) {
    for (const SpaceModel& model : duality_models(random_space(rng, n))) {
      for (int t = 0; t < 100; ++t) {
        const DualFunctional y = random_unit_functional(model, rng);
        worst_a = std::max(worst_a, dual_norm(model, norm_gradient(model, duality_point(model, y)) - y));
        const RealFunction x = random_unit_function(model, rng);
        worst_b = std::max(worst_b, norm(model, duality_point(model, norm_gradient(model, x)) - x));
      }
    }
  }
  return {worst_a <= 1e-7 && worst_b <= 1e-7,
          "max |N'(M(y)) - y|_* = " + sci(worst_a) + ", max |M(N'(x)) - x| = " + sci(worst_b) +
              " (tol 1e-7, 27 models x 100)"};
}

Outcome conjugation_closed_form() {
  double worst = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    const YoungFunction P = power_young(p, true);
    const double q = conjugate_exponent(p);
    for (int k = 0; k < 100; ++k) {
      const double v = -5.0 + 10.0 * k / 99.0;
      worst = std::max(worst, std::abs(conjugate(P, v) - std::pow(std::abs(v), q) / q));
    }
  }
  return {worst <= 1e-8, "max |Q(v) - |v|^q/q| = " + sci(worst) + " on v in [-5,5] (tol 1e-8)"};
}

Outcome luxemburg_closed_form() {
  Rng rng = make_rng(103);
  double worst = 0.0;
  const double exponents[] = {1.5, 2.0, 3.0, 4.0};
  for (int t = 0; t < 1000; ++t) {
    const double p = exponents[t % 4];
    const std::size_t n = pick(rng, 1, 32);
    const SpaceModel model = SpaceModel::orlicz(random_space(rng, n), power_young(p, false));
    RealFunction f = random_function(rng, n);
    f *= std::pow(10.0, uniform(rng, -3.0, 3.0));
    const double expected = lebesgue_norm(model.space(), f.values(), p);
    worst = std::max(worst, std::abs(luxemburg_norm(model, f) - expected) / expected);
  }
  return {worst <= 1e-10, "max relative |Lux - l^p| = " + sci(worst) + " over 1000 functions (tol 1e-10)"};
}

YoungFunction random_young(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0:
      return power_young(uniform(rng, 1.3, 4.0), true);
    case 1:
      return power_young(uniform(rng, 1.3, 4.0), false);
    default:
      return power_sum_young(uniform(rng, 1.3, 2.5), uniform(rng, 2.5, 4.0));
  }
}

Outcome orlicz_cross_check() {
  Rng rng = make_rng(104);
  double worst_amemiya = 0.0;
  double worst_ascent = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = pick(rng, 1, 16);
    const SpaceModel model = SpaceModel::orlicz(random_space(rng, n), random_young(rng));
    const DualFunctional g = random_functional(rng, n);
    const double kkt = orlicz_norm(model, g);
    worst_amemiya = std::max(worst_amemiya, std::abs(kkt - orlicz_norm_amemiya(model, g)));
    worst_ascent = std::max(worst_ascent, std::abs(kkt - oracle::orlicz_norm_ascent(model, g)));
  }
  return {worst_amemiya <= 1e-6 && worst_ascent <= 1e-6,
          "max |KKT - Amemiya| = " + sci(worst_amemiya) + ", max |KKT - ascent| = " + sci(worst_ascent) +
              " over 200 instances (tol 1e-6)"};
}

Outcome holder_inequality() {
  Rng rng = make_rng(105);
  double worst_random = 1e300;
  double worst_extremal = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = pick(rng, 1, 16);
    const SpaceModel model = SpaceModel::orlicz(random_space(rng, n), random_young(rng));
    const RealFunction f = random_function(rng, n);
    const DualFunctional g = random_functional(rng, n);
    worst_random = std::min(worst_random, holder_check(model, f, g));
    if (t % 5 == 0) {
      const OrliczSolve solve = orlicz_solve(model, g);
      worst_extremal = std::max(worst_extremal, holder_check(model, solve.maximizer, g));
    }
  }
  return {worst_random >= -1e-9 && worst_extremal <= 1e-6,
          "min slack = " + sci(worst_random) + " (tol -1e-9), max extremal slack = " + sci(worst_extremal) +
              " (tol 1e-6)"};
}

Outcome gradient_finite_differences() {
  Rng rng = make_rng(106);
  const double h = 1e-5;
  std::vector<SpaceModel> models = duality_models(random_space(rng, 8));
  models.push_back(SpaceModel::orlicz(random_space(rng, 8), power_sum_young(2.0, 3.0)));
  double worst = 0.0;
  std::string worst_model;
  int over = 0;
  double over_min_coordinate = 0.0;
  double over_fourth_order = 0.0;
  for (const SpaceModel& model : models) {
    for (int t = 0; t < 500; ++t) {
      const RealFunction x = random_function(rng, 8);
      const RealFunction u = random_function(rng, 8);
      const auto along = [&](double s) { return norm(model, x + s * u); };
      const double fd = (along(h) - along(-h)) / (2.0 * h);
      const double exact = pairing(model.space(), norm_gradient(model, x), u);
      const double scale = std::max(std::abs(exact), norm(model, u));
      const double err = std::abs(fd - exact) / scale;
      if (err > worst) {
        worst = err;
        worst_model = model.describe();
      }
      if (err > 1e-6) {
        // Diagnostics only: where the samples fail and what a higher-order stencil sees.
        ++over;
        double smallest = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) smallest = std::min(smallest, std::abs(x[i]) / norm(model, x));
        over_min_coordinate = std::max(over_min_coordinate, smallest);
        const double fd4 = (8.0 * (along(h / 2) - along(-h / 2)) - (along(h) - along(-h))) / (6.0 * h);
        over_fourth_order = std::max(over_fourth_order, std::abs(fd4 - exact) / scale);
      }
    }
  }
  std::string detail = "max relative |FD - N'(x)u| = " + sci(worst) + " at " + worst_model +
                       " (tol 1e-6, step 1e-5, 10 models x 500)";
  if (over > 0) {
    detail += "; " + std::to_string(over) + " sample(s) over tol, all with min |x_i|/|x| <= " +
              sci(over_min_coordinate) + ", fourth-order stencil error there " + sci(over_fourth_order);
  }
  return {worst <= 1e-6, detail};
}

Outcome hahn_banach() {
  Rng rng = make_rng(107);
  double worst_norm = 0.0;
  double worst_defect = 0.0;
  double worst_distance = 0.0;
  double worst_gain = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = pick(rng, 2, 16);
    const MeasureSpace space = random_space(rng, n);
    SpaceModel model = SpaceModel::hilbert(space);
    switch (t % 4) {
      case 1:
        model = SpaceModel::lebesgue(space, 3.0);
        break;
      case 2:
        model = SpaceModel::lebesgue(space, uniform(rng, 1.4, 4.0));
        break;
      case 3:
        model = SpaceModel::orlicz(space, power_sum_young(2.0, 3.0));
        break;
      default:
        break;
    }
    const std::size_t k = pick(rng, 1, n - 1);
    std::vector<RealFunction> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(random_function(rng, n));
    const Subspace sub(space, basis);
    SubFunctional y1{gaussian_vector(rng, k)};
    ExtensionOptions options;
    options.seed = static_cast<std::uint64_t>(t);
    const Extension ext = extend_functional(model, sub, y1, options);
    worst_norm = std::max(worst_norm, std::abs(ext.dual_norm - ext.subspace_norm));
    worst_defect = std::max(worst_defect, ext.restriction_defect);
    const UniquenessReport probe = uniqueness_probe(model, sub, y1, ext.functional, 8, 1000 + t);
    worst_distance = std::max(worst_distance, probe.max_distance);
    worst_gain = std::max(worst_gain, ext.dual_norm - probe.best_dual_norm);
  }
  return {worst_norm <= 1e-7 && worst_defect <= 1e-7 && worst_distance <= 1e-5 && worst_gain <= 1e-9,
          "max norm gap = " + sci(worst_norm) + ", max restriction defect = " + sci(worst_defect) +
              " (tol 1e-7); probe max distance = " + sci(worst_distance) + " (tol 1e-5), max norm gain = " +
              sci(worst_gain) + " (tol 1e-9)"};
}

Outcome reflexivity() {
  Rng rng = make_rng(108);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = pick(rng, 1, 16);
    const MeasureSpace space = random_space(rng, n);
    const SpaceModel model = t % 2 == 0 ? SpaceModel::hilbert(space) : SpaceModel::lebesgue(space, 3.0);
    const BidualElement phi(gaussian_vector(rng, n));
    const ReflexivityWitness w = reflexivity_witness(model, phi);
    for (int k = 0; k < 100; ++k) {
      const DualFunctional y = random_functional(rng, n);
      worst = std::max(worst, std::abs(bidual_action(space, phi, y) - pairing(space, y, w.witness)));
    }
  }
  return {worst <= 1e-7, "max |Phi(y) - y(x)| = " + sci(worst) + " over 20 models x 100 functionals (tol 1e-7)"};
}

Outcome mcshane() {
  Rng rng = make_rng(109);
  const std::vector<YoungFunction> youngs = {power_young(1.5), power_young(2.0), power_young(3.0),
                                             power_sum_young(2.0, 3.0)};
  double worst = 1e300;
  for (const YoungFunction& P : youngs) {
    for (double eps : {0.1, 0.5, 0.9}) {
      const double rho = rho_estimate(P, eps);
      for (int t = 0; t < 100000; ++t) {
        const double scale = std::pow(10.0, uniform(rng, -2.0, 2.0));
        const double u = scale * uniform(rng, -1.0, 1.0);
        const double v = scale * uniform(rng, -1.0, 1.0);
        worst = std::min(worst, mcshane_check(P, eps, rho, u, v));
      }
    }
  }
  return {worst >= -1e-9, "min slack = " + sci(worst) + " over 4 Young functions x 3 eps x 1e5 (tol -1e-9)"};
}

Outcome delta2() {
  double worst = 0.0;
  for (double p : {2.0, 3.0, 4.0}) {
    worst = std::max(worst, std::abs(delta2_constant(power_young(p)) - std::pow(2.0, p)));
  }
  return {worst <= 1e-6, "max |alpha - 2^p| = " + sci(worst) + " for p in {2,3,4} (tol 1e-6)"};
}

Outcome hilbert_modulus() {
  double worst = 0.0;
  for (std::size_t n : {2u, 8u}) {
    Rng rng = make_rng(110 + n);
    const SpaceModel model = SpaceModel::hilbert(random_space(rng, n));
    for (double eps : {0.5, 1.0, 1.5}) {
      const ConvexityModulus m = modulus_estimate(model, eps, 2000, 7);
      worst = std::max(worst, std::abs(m.delta_estimate - (1.0 - std::sqrt(1.0 - eps * eps / 4.0))));
    }
  }
  return {worst <= 1e-4, "max |delta - (1 - sqrt(1 - eps^2/4))| = " + sci(worst) + " (tol 1e-4)"};
}

Outcome mazur() {
  Rng rng = make_rng(112);
  double worst_trip = 0.0;
  double worst_norm = 0.0;
  const double exponents[] = {1.5, 2.0, 3.0, 4.0};
  for (int t = 0; t < 1000; ++t) {
    const double p = exponents[t % 4];
    const double q = conjugate_exponent(p);
    const std::size_t n = pick(rng, 1, 16);
    const MeasureSpace space = random_space(rng, n);
    const RealFunction h = random_function(rng, n);
    const RealFunction f = mazur_map(p, h);
    const RealFunction back = mazur_inverse(p, f);
    for (std::size_t i = 0; i < n; ++i) worst_trip = std::max(worst_trip, std::abs(back[i] - h[i]));
    const double lhs = lebesgue_norm(space, f.values(), q);
    const double rhs = std::pow(lebesgue_norm(space, h.values(), p), p / q);
    worst_norm = std::max(worst_norm, std::abs(lhs - rhs));
  }
  return {worst_trip <= 1e-10 && worst_norm <= 1e-9,
          "max round trip error = " + sci(worst_trip) + " (tol 1e-10), max norm identity error = " +
              sci(worst_norm) + " (tol 1e-9)"};
}

Outcome maximizing_sequence() {
  Rng rng = make_rng(113);
  const MeasureSpace space = random_space(rng, 8);
  const std::vector<SpaceModel> models = {SpaceModel::hilbert(space), SpaceModel::lebesgue(space, 3.0),
                                          SpaceModel::lebesgue(space, 1.5),
                                          SpaceModel::orlicz(space, power_sum_young(2.0, 3.0))};
  double worst_rise = 0.0;
  double worst_limit = 0.0;
  double worst_margin = 1e300;
  for (const SpaceModel& model : models) {
    for (int t = 0; t < 5; ++t) {
      const DualFunctional y = random_functional(rng, 8);
      const SequenceDiagnostics d = maximizing_sequence_experiment(model, y, 48, 200 + t);
      for (std::size_t k = 1; k < d.tail_diameters.size(); ++k) {
        worst_rise = std::max(worst_rise, d.tail_diameters[k] - d.tail_diameters[k - 1]);
      }
      const RealFunction limit = oracle::hyperplane_minimizer(model, y).point;
      worst_limit = std::max(worst_limit, norm(model, d.points.back() - limit));
      worst_margin = std::min(worst_margin, d.midpoint_margin);
    }
  }
  return {worst_rise <= 1e-9 && worst_limit <= 1e-6 && worst_margin >= -1e-9,
          "max tail diameter increase = " + sci(worst_rise) + " (tol 1e-9), max |x_48 - M(y)| = " +
              sci(worst_limit) + " (tol 1e-6), min midpoint margin = " + sci(worst_margin)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"duality round trip", duality_round_trip},
      {"conjugation closed form", conjugation_closed_form},
      {"Luxemburg closed form", luxemburg_closed_form},
      {"Orlicz norm cross-check", orlicz_cross_check},
      {"Hoelder inequality", holder_inequality},
      {"gradient vs finite differences", gradient_finite_differences},
      {"Hahn-Banach extension", hahn_banach},
      {"reflexivity witness", reflexivity},
      {"McShane inequality", mcshane},
      {"Delta_2 constants", delta2},
      {"Hilbert modulus", hilbert_modulus},
      {"Mazur map", mazur},
      {"maximizing sequence", maximizing_sequence},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s AC%02d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
