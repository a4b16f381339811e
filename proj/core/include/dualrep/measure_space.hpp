#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dualrep {

/// A finite measure space: n atoms, each carrying a strictly positive weight.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<double> weights);
  MeasureSpace(std::initializer_list<double> weights)
      : MeasureSpace(std::vector<double>(weights)) {}

  static MeasureSpace uniform(std::size_t n, double weight = 1.0);

  std::size_t dimension() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  double total_mass() const noexcept { return total_mass_; }

  friend bool operator==(const MeasureSpace&, const MeasureSpace&) = default;

 private:
  std::vector<double> weights_;
  double total_mass_ = 0.0;
};

namespace detail {
struct FunctionTag {};
struct FunctionalTag {};
[[noreturn]] void throw_size_mismatch(std::size_t expected, std::size_t actual);
}  // namespace detail

/// Coefficient vector indexed by atoms.  The tag keeps elements of X and of
/// its dual from being mixed up silently.
template <class Tag>
class AtomVector {
 public:
  AtomVector() = default;
  explicit AtomVector(std::vector<double> values) : values_(std::move(values)) {}
  AtomVector(std::initializer_list<double> values) : values_(values) {}

  static AtomVector zeros(std::size_t n) { return AtomVector(std::vector<double>(n, 0.0)); }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  bool is_zero() const noexcept {
    for (double v : values_) {
      if (v != 0.0) return false;
    }
    return true;
  }

  AtomVector& operator+=(const AtomVector& other) {
    check_same_size(other.size());
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  AtomVector& operator-=(const AtomVector& other) {
    check_same_size(other.size());
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
  }
  AtomVector& operator*=(double c) noexcept {
    for (double& v : values_) v *= c;
    return *this;
  }

  friend AtomVector operator+(AtomVector a, const AtomVector& b) { return a += b; }
  friend AtomVector operator-(AtomVector a, const AtomVector& b) { return a -= b; }
  friend AtomVector operator*(double c, AtomVector a) { return a *= c; }
  friend AtomVector operator*(AtomVector a, double c) { return a *= c; }
  friend AtomVector operator-(AtomVector a) { return a *= -1.0; }
  friend bool operator==(const AtomVector&, const AtomVector&) = default;

 private:
  void check_same_size(std::size_t other) const {
    if (other != values_.size()) detail::throw_size_mismatch(values_.size(), other);
  }

  std::vector<double> values_;
};

/// An element f of X (L^P, L^p or the Hilbert space over the atoms).
using RealFunction = AtomVector<detail::FunctionTag>;
/// A coefficient vector g acting on X through f -> sum_i g_i f_i mu_i.
using DualFunctional = AtomVector<detail::FunctionalTag>;

/// Reinterpret coefficients as the other kind.  Used where the pairing
/// identifies X with X' (Hilbert) or X'' with X.
DualFunctional as_functional(const RealFunction& f);
RealFunction as_function(const DualFunctional& g);

void check_dimension(const MeasureSpace& space, std::size_t size, const char* what);

/// sum_i f_i mu_i
double integrate(const MeasureSpace& space, const RealFunction& f);
/// sum_i g_i f_i mu_i
double pairing(const MeasureSpace& space, const DualFunctional& g, const RealFunction& f);

/// Weighted sum of a_i * b_i * w_i.  Plain accumulation up to 1000 terms,
/// Neumaier-compensated above.
double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w);

double max_abs(std::span<const double> values) noexcept;

}  // namespace dualrep
