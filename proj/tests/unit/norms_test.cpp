#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dualrep/errors.hpp"
#include "dualrep/norms.hpp"
#include "dualrep/sampling.hpp"
#include "oracles.hpp"

namespace dualrep {
namespace {

const MeasureSpace kPair({1.0, 1.0});

TEST(Luxemburg, Examples) {
  EXPECT_NEAR(norm(SpaceModel::orlicz(kPair, power_young(2.0, false)), RealFunction{3.0, 4.0}), 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(norm(SpaceModel::orlicz(kPair, power_young(2.0, false)), RealFunction::zeros(2)), 0.0);
  EXPECT_NEAR(norm(SpaceModel::orlicz(kPair, power_young(2.0, true)), RealFunction{3.0, 4.0}), 5.0 / std::sqrt(2.0),
              1e-12);
}

TEST(Luxemburg, SolveReportsBracketAndUnitModular) {
  const SpaceModel m = SpaceModel::orlicz(MeasureSpace({0.5, 2.0, 1.0}), power_sum_young(2.0, 3.0));
  const RealFunction f{1.0, -0.3, 2.0};
  const LuxemburgSolve s = luxemburg_solve(m, f);
  EXPECT_LE(s.lower, s.norm);
  EXPECT_GE(s.upper, s.norm);
  EXPECT_LE(s.upper - s.lower, 1e-14 * s.norm);
  EXPECT_GT(s.iterations, 0);
  EXPECT_NEAR(modular(m, (1.0 / s.norm) * f), 1.0, 1e-12);
}

TEST(OrliczNorm, Examples) {
  EXPECT_NEAR(dual_norm(SpaceModel::orlicz(kPair, power_young(2.0, false)), DualFunctional{3.0, 4.0}), 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(dual_norm(SpaceModel::orlicz(kPair, power_young(2.0, false)), DualFunctional::zeros(2)), 0.0);
  EXPECT_NEAR(dual_norm(SpaceModel::orlicz(kPair, power_young(2.0, true)), DualFunctional{3.0, 4.0}),
              5.0 * std::sqrt(2.0), 1e-12);
}

TEST(Norm, Examples) {
  EXPECT_NEAR(norm(SpaceModel::hilbert(kPair), RealFunction{3.0, 4.0}), 5.0, 1e-15);
  EXPECT_NEAR(norm(SpaceModel::lebesgue(kPair, 3.0), RealFunction{1.0, 1.0}), std::cbrt(2.0), 1e-15);
}

TEST(Norm, LebesgueAvoidsOverflow) {
  const SpaceModel m = SpaceModel::lebesgue(kPair, 4.0);
  EXPECT_NEAR(norm(m, RealFunction{1e300, 1e300}) / 1e300, std::pow(2.0, 0.25), 1e-14);
  EXPECT_NEAR(norm(m, RealFunction{1e-300, 0.0}) / 1e-300, 1.0, 1e-14);
}

TEST(Norm, OrliczPowerMatchesLebesgue) {
  Rng rng = make_rng(31);
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng() % 16;
      const MeasureSpace s = random_space(rng, n);
      const RealFunction f = random_function(rng, n);
      const DualFunctional g = random_functional(rng, n);
      const double lp = norm(SpaceModel::lebesgue(s, p), f);
      EXPECT_NEAR(norm(SpaceModel::orlicz(s, power_young(p, false)), f), lp, 1e-10 * lp);
      EXPECT_NEAR(norm(SpaceModel::orlicz(s, power_young(p, true)), f), std::pow(p, -1.0 / p) * lp, 1e-10 * lp);
      const double lq = dual_norm(SpaceModel::lebesgue(s, p), g);
      EXPECT_NEAR(dual_norm(SpaceModel::orlicz(s, power_young(p, false)), g), lq, 1e-10 * lq);
      EXPECT_NEAR(dual_norm(SpaceModel::orlicz(s, power_young(p, true)), g), std::pow(p, 1.0 / p) * lq, 1e-10 * lq);
    }
  }
}

TEST(OrliczNorm, AgreesWithAmemiyaAndAscentOracle) {
  Rng rng = make_rng(37);
  for (const YoungFunction& y : {power_young(3.0), power_sum_young(2.0, 3.0), power_sum_young(1.5, 4.0)}) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 1 + rng() % 8;
      const SpaceModel m = SpaceModel::orlicz(random_space(rng, n), y);
      const DualFunctional g = random_functional(rng, n);
      const OrliczSolve s = orlicz_solve(m, g);
      EXPECT_NEAR(s.norm, orlicz_norm_amemiya(m, g), 1e-6 * s.norm) << y.label();
      EXPECT_NEAR(s.norm, oracle::orlicz_norm_ascent(m, g), 1e-6 * s.norm) << y.label();
      EXPECT_NEAR(modular(m, s.maximizer), 1.0, 1e-12);
      EXPECT_NEAR(pairing(m.space(), g, s.maximizer), s.norm, 1e-12 * s.norm);
    }
  }
}

TEST(DualNorm, IsOperatorNorm) {
  Rng rng = make_rng(41);
  const MeasureSpace s = random_space(rng, 5);
  for (const SpaceModel& m : {SpaceModel::hilbert(s), SpaceModel::lebesgue(s, 3.0), SpaceModel::lebesgue(s, 1.5),
                              SpaceModel::orlicz(s, power_sum_young(2.0, 3.0))}) {
    for (int t = 0; t < 4; ++t) {
      const DualFunctional g = random_functional(rng, 5);
      const double dn = dual_norm(m, g);
      EXPECT_NEAR(dn, oracle::operator_norm(m, g), 1e-6 * dn) << m.describe();
    }
  }
}

TEST(Holder, ExamplesAndFuzz) {
  const SpaceModel sq = SpaceModel::orlicz(kPair, power_young(2.0, false));
  EXPECT_NEAR(holder_check(sq, RealFunction{1.0, 0.0}, DualFunctional{1.0, 0.0}), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(holder_check(sq, RealFunction::zeros(2), DualFunctional{1.0, 2.0}), 0.0);

  Rng rng = make_rng(43);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const SpaceModel m = SpaceModel::orlicz(random_space(rng, n), t % 2 ? power_young(3.0) : power_sum_young(2.0, 4.0));
    EXPECT_GE(holder_check(m, random_function(rng, n), random_functional(rng, n)), -1e-9);
  }
}

TEST(Holder, ExtremalPairIsTight) {
  Rng rng = make_rng(47);
  const SpaceModel m = SpaceModel::orlicz(random_space(rng, 6), power_sum_young(2.0, 3.0));
  const DualFunctional g = random_functional(rng, 6);
  RealFunction f = orlicz_solve(m, g).maximizer;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] * f[i] < 0.0) f[i] = -f[i];
  }
  EXPECT_NEAR(holder_check(m, f, g), 0.0, 1e-6);
}

TEST(Norm, AxiomsOnRandomInputs) {
  Rng rng = make_rng(53);
  std::uniform_real_distribution<double> c(-4.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const MeasureSpace s = random_space(rng, n);
    const SpaceModel m = t % 3 == 0   ? SpaceModel::hilbert(s)
                         : t % 3 == 1 ? SpaceModel::lebesgue(s, 2.5)
                                      : SpaceModel::orlicz(s, power_sum_young(1.5, 3.0));
    const RealFunction f = random_function(rng, n);
    const RealFunction h = random_function(rng, n);
    const double a = c(rng);
    EXPECT_LE(norm(m, f + h), (norm(m, f) + norm(m, h)) * (1.0 + 1e-12));
    EXPECT_NEAR(norm(m, a * f), std::abs(a) * norm(m, f), 1e-12 * std::abs(a) * norm(m, f));
    EXPECT_GT(norm(m, f), 0.0);
  }
}

TEST(SpaceModel, DualStructures) {
  EXPECT_TRUE(SpaceModel::hilbert(kPair).dual().is_hilbert());
  EXPECT_NEAR(SpaceModel::lebesgue(kPair, 3.0).dual().exponent(), 1.5, 1e-15);
  try {
    SpaceModel::orlicz(kPair, power_young(3.0)).dual();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedModel);
  }
  EXPECT_THROW(SpaceModel::lebesgue(kPair, 1.0), Error);
  EXPECT_THROW(SpaceModel::hilbert(kPair).exponent(), Error);
}

TEST(Norm, DimensionErrors) {
  EXPECT_THROW(norm(SpaceModel::hilbert(kPair), RealFunction{1.0}), Error);
  EXPECT_THROW(dual_norm(SpaceModel::orlicz(kPair, power_young(2.0)), DualFunctional{1.0, 2.0, 3.0}), Error);
}

}  // namespace
}  // namespace dualrep
