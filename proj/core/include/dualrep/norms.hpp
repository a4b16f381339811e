#pragma once

#include <string>
#include <variant>

#include "dualrep/measure_space.hpp"
#include "dualrep/young.hpp"

namespace dualrep {

struct HilbertStructure {};
struct LebesgueStructure {
  double p = 2.0;
};
struct OrliczStructure {
  YoungFunction young;
};
using NormStructure = std::variant<HilbertStructure, LebesgueStructure, OrliczStructure>;

/// A measure space together with the norm structure put on its functions.
class SpaceModel {
 public:
  SpaceModel(MeasureSpace space, NormStructure structure);

  static SpaceModel hilbert(MeasureSpace space);
  static SpaceModel lebesgue(MeasureSpace space, double p);
  static SpaceModel orlicz(MeasureSpace space, YoungFunction young);

  const MeasureSpace& space() const noexcept { return space_; }
  const NormStructure& structure() const noexcept { return structure_; }
  std::size_t dimension() const noexcept { return space_.dimension(); }

  bool is_hilbert() const noexcept { return std::holds_alternative<HilbertStructure>(structure_); }
  bool is_lebesgue() const noexcept { return std::holds_alternative<LebesgueStructure>(structure_); }
  bool is_orlicz() const noexcept { return std::holds_alternative<OrliczStructure>(structure_); }

  /// Exponent of a Lebesgue model; throws otherwise.
  double exponent() const;
  /// Young function of an Orlicz model; throws otherwise.
  const YoungFunction& young() const;

  /// The model whose norm is the dual norm: Hilbert -> Hilbert,
  /// Lebesgue(p) -> Lebesgue(p/(p-1)).  Orlicz models throw kUnsupportedModel.
  SpaceModel dual() const;

  std::string describe() const;

  /// P^{-1}(1 / total mass) for Orlicz models: the constant level that has
  /// unit modular.  Seeds the Luxemburg bracket.
  double unit_level() const noexcept { return unit_level_; }

 private:
  MeasureSpace space_;
  NormStructure structure_;
  double unit_level_ = 1.0;
};

double conjugate_exponent(double p);

/// (sum_i |f_i|^p mu_i)^{1/p}, evaluated with max-scaling.
double lebesgue_norm(const MeasureSpace& space, std::span<const double> values, double p);

/// sum_i P(f_i) mu_i
double modular(const SpaceModel& model, const RealFunction& f);

struct LuxemburgSolve {
  double norm = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};

/// Luxemburg norm inf{k > 0 : sum P(f_i/k) mu_i <= 1}, as the root of the
/// strictly decreasing map k -> sum P(f_i/k) mu_i.
LuxemburgSolve luxemburg_solve(const SpaceModel& model, const RealFunction& f);
double luxemburg_norm(const SpaceModel& model, const RealFunction& f);

struct OrliczSolve {
  double norm = 0.0;
  /// lambda with f_i = (P')^{-1}(g_i / lambda)
  double multiplier = 0.0;
  /// The maximizer of sum f g mu over {sum P(f) mu <= 1}.
  RealFunction maximizer;
  int iterations = 0;
};

/// Orlicz norm sup{ sum f_i g_i mu_i : sum P(f_i) mu_i <= 1 } through the
/// stationarity condition P'(f_i) = g_i / lambda.
OrliczSolve orlicz_solve(const SpaceModel& model, const DualFunctional& g);
double orlicz_norm(const SpaceModel& model, const DualFunctional& g);

/// inf_{k>0} k^{-1} (1 + sum Q(k g_i) mu_i), golden-section in log k.  Only
/// used to cross-check orlicz_norm.
double orlicz_norm_amemiya(const SpaceModel& model, const DualFunctional& g);

/// Norm of X: Euclidean, l^p, or Luxemburg.
double norm(const SpaceModel& model, const RealFunction& f);

/// Norm of X' under the pairing: Euclidean, l^q, or Orlicz.
double dual_norm(const SpaceModel& model, const DualFunctional& g);

/// norm(f) * dual_norm(g) - sum |f_i g_i| mu_i; nonnegative by Hoelder.
double holder_check(const SpaceModel& model, const RealFunction& f, const DualFunctional& g);

}  // namespace dualrep
