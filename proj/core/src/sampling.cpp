#include "dualrep/sampling.hpp"

#include <cmath>

namespace dualrep {

std::vector<double> gaussian_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = normal(rng);
  return out;
}

RealFunction random_function(Rng& rng, std::size_t n) { return RealFunction(gaussian_vector(rng, n)); }

DualFunctional random_functional(Rng& rng, std::size_t n) {
  return DualFunctional(gaussian_vector(rng, n));
}

RealFunction random_unit_function(const SpaceModel& model, Rng& rng) {
  RealFunction f = random_function(rng, model.dimension());
  while (f.is_zero()) f = random_function(rng, model.dimension());
  return (1.0 / norm(model, f)) * f;
}

DualFunctional random_unit_functional(const SpaceModel& model, Rng& rng) {
  DualFunctional g = random_functional(rng, model.dimension());
  while (g.is_zero()) g = random_functional(rng, model.dimension());
  return (1.0 / dual_norm(model, g)) * g;
}

MeasureSpace random_space(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> uniform(std::log(lo), std::log(hi));
  std::vector<double> weights(n);
  for (double& w : weights) w = std::exp(uniform(rng));
  return MeasureSpace(std::move(weights));
}

}  // namespace dualrep
