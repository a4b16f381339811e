#include <gtest/gtest.h>

#include <cmath>

#include "dualrep/duality.hpp"
#include "dualrep/errors.hpp"
#include "dualrep/sampling.hpp"
#include "oracles.hpp"

namespace dualrep {
namespace {

const MeasureSpace kPair({1.0, 1.0});

std::vector<SpaceModel> models_on(const MeasureSpace& s) {
  return {SpaceModel::hilbert(s), SpaceModel::lebesgue(s, 3.0), SpaceModel::lebesgue(s, 1.5),
          SpaceModel::orlicz(s, power_young(3.0)), SpaceModel::orlicz(s, power_sum_young(2.0, 3.0))};
}

TEST(NormGradient, Examples) {
  const DualFunctional h = norm_gradient(SpaceModel::hilbert(kPair), RealFunction{0.6, 0.8});
  EXPECT_NEAR(h[0], 0.6, 1e-15);
  EXPECT_NEAR(h[1], 0.8, 1e-15);
  const DualFunctional l = norm_gradient(SpaceModel::lebesgue(kPair, 3.0), RealFunction{1.0, 1.0});
  EXPECT_NEAR(l[0], std::pow(2.0, -2.0 / 3.0), 1e-15);
  EXPECT_NEAR(l[0], 0.629961, 1e-6);
  EXPECT_NEAR(l[1], l[0], 1e-15);
}

TEST(NormGradient, ZeroIsAnError) {
  try {
    norm_gradient(SpaceModel::lebesgue(kPair, 3.0), RealFunction::zeros(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGradientUndefined);
  }
}

TEST(NormGradient, OrliczPowerAgreesWithLebesgue) {
  Rng rng = make_rng(61);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const MeasureSpace s = random_space(rng, n);
    const RealFunction x = random_function(rng, n);
    for (double p : {1.5, 3.0}) {
      const DualFunctional a = norm_gradient(SpaceModel::lebesgue(s, p), x);
      for (bool normalized : {true, false}) {
        // Luxemburg with |u|^p/p is p^{-1/p} times the l^p norm.
        const double factor = normalized ? std::pow(p, -1.0 / p) : 1.0;
        const DualFunctional b = norm_gradient(SpaceModel::orlicz(s, power_young(p, normalized)), x);
        EXPECT_LE(max_abs((factor * a - b).values()), 1e-8);
      }
    }
  }
}

TEST(NormGradient, MatchesFourthOrderDifferences) {
  Rng rng = make_rng(67);
  for (const SpaceModel& m : models_on(random_space(rng, 4))) {
    const RealFunction x = random_function(rng, 4);
    const RealFunction u = random_function(rng, 4);
    const double h = 1e-3;
    const double fd = (-norm(m, x + 2 * h * u) + 8 * norm(m, x + h * u) - 8 * norm(m, x - h * u) +
                       norm(m, x - 2 * h * u)) /
                      (12 * h);
    EXPECT_NEAR(pairing(m.space(), norm_gradient(m, x), u), fd, 1e-8) << m.describe();
  }
}

TEST(NormGradient, HomogeneousOfDegreeZeroWithUnitDualNorm) {
  Rng rng = make_rng(71);
  for (const SpaceModel& m : models_on(random_space(rng, 6))) {
    const RealFunction x = random_function(rng, 6);
    const DualFunctional g = norm_gradient(m, x);
    EXPECT_LE(max_abs((norm_gradient(m, 7.5 * x) - g).values()), 1e-12);
    EXPECT_NEAR(dual_norm(m, g), 1.0, 1e-8) << m.describe();
  }
}

TEST(DualityMap, Examples) {
  const DualityResult h = duality_map(SpaceModel::hilbert(kPair), DualFunctional{0.6, 0.8});
  EXPECT_NEAR(h.point[0], 0.6, 1e-15);
  EXPECT_NEAR(h.point[1], 0.8, 1e-15);

  const double c = std::pow(2.0, -2.0 / 3.0);
  const DualityResult l = duality_map(SpaceModel::lebesgue(kPair, 3.0), DualFunctional{c, c});
  EXPECT_NEAR(l.point[0], std::pow(2.0, -1.0 / 3.0), 1e-12);
  EXPECT_NEAR(l.point[1], std::pow(2.0, -1.0 / 3.0), 1e-12);
  EXPECT_NEAR(l.action, 1.0, 1e-12);
}

TEST(DualityMap, ZeroIsAnError) {
  for (const SpaceModel& m : models_on(kPair)) {
    try {
      duality_map(m, DualFunctional::zeros(2));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUndefinedDirection);
    }
  }
}

TEST(DualityMap, InvertsTheGradient) {
  Rng rng = make_rng(73);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 24;
    for (const SpaceModel& m : models_on(random_space(rng, n))) {
      const RealFunction x = random_unit_function(m, rng);
      EXPECT_LE(norm(m, duality_point(m, norm_gradient(m, x)) - x), 1e-8) << m.describe();
      const DualFunctional y = random_functional(rng, n);
      const DualityResult r = duality_map(m, y);
      EXPECT_LE(r.residual, 1e-7) << m.describe();
      EXPECT_NEAR(norm(m, r.point), 1.0, 1e-9);
      EXPECT_NEAR(r.action, 1.0, 1e-8);
      EXPECT_NEAR(r.scale, dual_norm(m, y), 1e-14 * r.scale);
    }
  }
}

TEST(DualityMap, AgreesWithHyperplaneOracle) {
  Rng rng = make_rng(79);
  for (int t = 0; t < 3; ++t) {
    const std::size_t n = 2 + rng() % 7;
    for (const SpaceModel& m : models_on(random_space(rng, n))) {
      const DualFunctional y = random_functional(rng, n);
      const oracle::HyperplaneMinimum o = oracle::hyperplane_minimizer(m, y);
      EXPECT_LE(norm(m, duality_point(m, y) - o.point), 1e-6) << m.describe();
      EXPECT_NEAR(1.0 / o.min_norm, dual_norm(m, y), 1e-6 * dual_norm(m, y));
    }
  }
}

TEST(DualityMap, StrictMaximality) {
  Rng rng = make_rng(83);
  for (const SpaceModel& m : models_on(random_space(rng, 5))) {
    const DualFunctional y = random_functional(rng, 5);
    const DualityResult r = duality_map(m, y);
    const DualFunctional y_hat = (1.0 / r.scale) * y;
    for (int s = 0; s < 1000; ++s) {
      const RealFunction z = random_unit_function(m, rng);
      EXPECT_LT(pairing(m.space(), y_hat, z), r.action);
    }
  }
}

TEST(DualityMap, ScaleInvariant) {
  Rng rng = make_rng(89);
  for (const SpaceModel& m : models_on(random_space(rng, 5))) {
    const DualFunctional y = random_functional(rng, 5);
    EXPECT_LE(norm(m, duality_point(m, 0.01 * y) - duality_point(m, 40.0 * y)), 1e-10) << m.describe();
  }
}

TEST(Riesz, HilbertDensityIsTheFunctional) {
  const SpaceModel m = SpaceModel::hilbert(MeasureSpace({0.5, 2.0, 1.0}));
  const DualFunctional y{1.0, -2.0, 0.5};
  const RieszRepresentation r = riesz_represent(m, y);
  EXPECT_LE(max_abs((r.density - y).values()), 1e-14);
  EXPECT_LE(r.max_defect, 1e-8);
  EXPECT_EQ(r.probes, 100);
}

TEST(Riesz, LebesgueDensityFormulaAndHomogeneity) {
  Rng rng = make_rng(97);
  const double p = 3.0;
  const double q = 1.5;
  const SpaceModel m = SpaceModel::lebesgue(random_space(rng, 6), p);
  const DualFunctional y = random_functional(rng, 6);
  const RieszRepresentation r = riesz_represent(m, y, 1);
  const RealFunction h = duality_point(m, y);
  const double s = dual_norm(m, y);
  for (std::size_t i = 0; i < 6; ++i) {
    const double expected = s * std::pow(std::abs(h[i]), p / q) * (h[i] < 0 ? -1.0 : 1.0);
    EXPECT_NEAR(r.density[i], expected, 1e-12);
  }
  EXPECT_LE(r.max_defect, 1e-8);
  EXPECT_LE(max_abs((riesz_represent(m, 3.0 * y, 1).density - 3.0 * r.density).values()), 1e-12);
}

TEST(Riesz, ReproducesOrliczFunctionals) {
  Rng rng = make_rng(101);
  const SpaceModel m = SpaceModel::orlicz(random_space(rng, 7), power_sum_young(2.0, 3.0));
  EXPECT_LE(riesz_represent(m, random_functional(rng, 7), 2).max_defect, 1e-8);
}

TEST(Mazur, Examples) {
  const RealFunction h{1.5, -0.25, 0.0};
  EXPECT_EQ(mazur_map(2.0, h), h);
  const RealFunction f = mazur_map(4.0, RealFunction{2.0, 0.0});
  EXPECT_DOUBLE_EQ(f[0], 8.0);
  EXPECT_DOUBLE_EQ(f[1], 0.0);
  EXPECT_THROW(mazur_map(1.0, h), Error);
}

TEST(Mazur, RoundTripAndNormIdentity) {
  Rng rng = make_rng(103);
  for (double p : {1.5, 3.0, 4.0}) {
    const double q = p / (p - 1.0);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng() % 12;
      const MeasureSpace s = random_space(rng, n);
      const RealFunction h = random_function(rng, n);
      const RealFunction f = mazur_map(p, h);
      EXPECT_LE(max_abs((mazur_inverse(p, f) - h).values()), 1e-10);
      EXPECT_NEAR(lebesgue_norm(s, f.values(), q), std::pow(lebesgue_norm(s, h.values(), p), p / q), 1e-9);
    }
  }
}

TEST(Reflexivity, HilbertWitnessIsPhi) {
  const SpaceModel m = SpaceModel::hilbert(MeasureSpace({1.0, 3.0}));
  const BidualElement phi{0.3, -1.2};
  const ReflexivityWitness w = reflexivity_witness(m, phi);
  EXPECT_NEAR(w.witness[0], 0.3, 1e-14);
  EXPECT_NEAR(w.witness[1], -1.2, 1e-14);
}

TEST(Reflexivity, LebesgueWitnessReproducesPhi) {
  Rng rng = make_rng(107);
  for (double p : {3.0, 1.5}) {
    const SpaceModel m = SpaceModel::lebesgue(random_space(rng, 6), p);
    const BidualElement phi(random_function(rng, 6).vector());
    const ReflexivityWitness w = reflexivity_witness(m, phi);
    for (int s = 0; s < 100; ++s) {
      const DualFunctional y = random_unit_functional(m, rng);
      EXPECT_NEAR(bidual_action(m.space(), phi, y), pairing(m.space(), y, w.witness), 1e-7);
    }
    const ReflexivityWitness scaled = reflexivity_witness(m, BidualElement((2.0 * RealFunction(phi.vector())).vector()));
    EXPECT_LE(max_abs((scaled.witness - 2.0 * w.witness).values()), 1e-12);
    EXPECT_NEAR(scaled.scale, 2.0 * w.scale, 1e-12);
  }
}

TEST(Reflexivity, OrliczIsUnsupported) {
  try {
    reflexivity_witness(SpaceModel::orlicz(kPair, power_young(3.0)), BidualElement{1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedModel);
  }
}

TEST(Gateaux, ZeroStepAndHilbertBound) {
  Rng rng = make_rng(109);
  const SpaceModel m = SpaceModel::hilbert(random_space(rng, 5));
  const RealFunction x = random_unit_function(m, rng);
  const RealFunction u = random_function(rng, 5);
  const double steps[] = {0.0, 1e-1, 1e-2, 1e-3, -1e-2};
  const GateauxProfile g = gateaux_fd_check(m, x, u, steps);
  EXPECT_DOUBLE_EQ(g.residuals[0], 0.0);
  const double uu = norm(m, u) * norm(m, u);
  for (std::size_t k = 1; k < g.steps.size(); ++k) {
    EXPECT_LE(g.residuals[k], g.steps[k] * g.steps[k] * uu / 2.0 + 1e-15);
  }
}

TEST(Gateaux, RatioDropsTenfoldPerDecade) {
  Rng rng = make_rng(113);
  const SpaceModel m = SpaceModel::lebesgue(random_space(rng, 5), 3.0);
  const double steps[] = {1e-2, 1e-3, 1e-4};
  for (int t = 0; t < 20; ++t) {
    const GateauxProfile g = gateaux_fd_check(m, random_function(rng, 5), random_function(rng, 5), steps);
    for (std::size_t k = 1; k < 3; ++k) {
      const double drop = g.ratios[k] / g.ratios[k - 1];
      EXPECT_GT(drop, 0.05);
      EXPECT_LT(drop, 0.2);
    }
  }
}

}  // namespace
}  // namespace dualrep
