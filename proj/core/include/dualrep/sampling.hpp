#pragma once

#include <cstdint>
#include <random>

#include "dualrep/norms.hpp"

namespace dualrep {

/// The one generator type used everywhere; callers thread it explicitly.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

std::vector<double> gaussian_vector(Rng& rng, std::size_t n);

RealFunction random_function(Rng& rng, std::size_t n);
DualFunctional random_functional(Rng& rng, std::size_t n);

/// Gaussian direction scaled onto the unit sphere of the model.
RealFunction random_unit_function(const SpaceModel& model, Rng& rng);
/// Gaussian direction scaled onto the unit sphere of the dual norm.
DualFunctional random_unit_functional(const SpaceModel& model, Rng& rng);

/// Positive weights drawn log-uniformly from [lo, hi].
MeasureSpace random_space(Rng& rng, std::size_t n, double lo = 0.25, double hi = 4.0);

}  // namespace dualrep
