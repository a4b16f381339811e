#include "dualrep/measure_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dualrep/errors.hpp"

namespace dualrep {

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) raise(ErrorKind::kDomain, "measure space needs at least one atom");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w > 0.0) || !std::isfinite(w)) {
      raise(ErrorKind::kDomain,
            "atom weight " + std::to_string(i) + " must be positive and finite");
    }
  }
  const std::vector<double> ones(weights_.size(), 1.0);
  total_mass_ = weighted_dot(ones, ones, weights_);
}

MeasureSpace MeasureSpace::uniform(std::size_t n, double weight) {
  return MeasureSpace(std::vector<double>(n, weight));
}

namespace detail {
void throw_size_mismatch(std::size_t expected, std::size_t actual) {
  raise(ErrorKind::kDimensionMismatch, "vector of size " + std::to_string(actual) +
                                           " combined with size " + std::to_string(expected));
}
}  // namespace detail

DualFunctional as_functional(const RealFunction& f) { return DualFunctional(f.vector()); }
RealFunction as_function(const DualFunctional& g) { return RealFunction(g.vector()); }

void check_dimension(const MeasureSpace& space, std::size_t size, const char* what) {
  if (size != space.dimension()) {
    raise(ErrorKind::kDimensionMismatch, std::string(what) + " has " + std::to_string(size) +
                                             " entries, space has " +
                                             std::to_string(space.dimension()) + " atoms");
  }
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  const std::size_t n = w.size();
  if (n <= 1000) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i] * w[i];
    return sum;
  }
  double sum = 0.0;
  double compensation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double term = a[i] * b[i] * w[i];
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double max_abs(std::span<const double> values) noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double integrate(const MeasureSpace& space, const RealFunction& f) {
  check_dimension(space, f.size(), "function");
  const std::vector<double> ones(f.size(), 1.0);
  return weighted_dot(f.values(), ones, space.weights());
}

double pairing(const MeasureSpace& space, const DualFunctional& g, const RealFunction& f) {
  check_dimension(space, g.size(), "functional");
  check_dimension(space, f.size(), "function");
  return weighted_dot(g.values(), f.values(), space.weights());
}

}  // namespace dualrep
