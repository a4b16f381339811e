#include "dualrep/extension.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "dualrep/errors.hpp"
#include "dualrep/minimize.hpp"
#include "dualrep/sampling.hpp"

namespace dualrep {
namespace {

Eigen::MatrixXd orthogonal_complement(const Eigen::VectorXd& a) {
  const Eigen::Index k = a.size();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
  return q.rightCols(k - 1);
}

}  // namespace

Subspace::Subspace(const MeasureSpace& space, std::vector<RealFunction> basis,
                   double gram_threshold)
    : basis_(std::move(basis)), ambient_dimension_(space.dimension()) {
  if (basis_.empty()) raise(ErrorKind::kDomain, "subspace needs at least one basis vector");
  if (basis_.size() > space.dimension()) {
    raise(ErrorKind::kIllConditioned, "more basis vectors than atoms");
  }
  for (const RealFunction& b : basis_) check_dimension(space, b.size(), "basis vector");

  const Eigen::Index k = static_cast<Eigen::Index>(basis_.size());
  std::vector<double> lengths(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    lengths[j] = std::sqrt(weighted_dot(basis_[j].values(), basis_[j].values(), space.weights()));
    if (!(lengths[j] > 0.0)) raise(ErrorKind::kIllConditioned, "zero basis vector");
  }
  Eigen::MatrixXd gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      gram(i, j) = weighted_dot(basis_[ui].values(), basis_[uj].values(), space.weights()) /
                   (lengths[ui] * lengths[uj]);
    }
  }
  gram_determinant_ = gram.determinant();
  if (!(gram_determinant_ >= gram_threshold)) {
    raise(ErrorKind::kIllConditioned,
          "basis Gram determinant " + std::to_string(gram_determinant_) + " below threshold");
  }
}

RealFunction Subspace::combine(std::span<const double> coefficients) const {
  if (coefficients.size() != basis_.size()) {
    raise(ErrorKind::kDimensionMismatch, "coefficient count differs from basis size");
  }
  RealFunction x = RealFunction::zeros(ambient_dimension_);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (std::size_t i = 0; i < ambient_dimension_; ++i) x[i] += coefficients[j] * basis_[j][i];
  }
  return x;
}

SubFunctional restrict(const SpaceModel& model, const Subspace& sub, const DualFunctional& y) {
  check_dimension(model.space(), sub.ambient_dimension(), "subspace");
  SubFunctional out;
  out.action.reserve(sub.size());
  for (const RealFunction& b : sub.basis()) out.action.push_back(pairing(model.space(), y, b));
  return out;
}

Extension extend_functional(const SpaceModel& model, const Subspace& sub, const SubFunctional& y1,
                            const ExtensionOptions& options) {
  check_dimension(model.space(), sub.ambient_dimension(), "subspace");
  if (y1.action.size() != sub.size()) {
    raise(ErrorKind::kDimensionMismatch, "action length differs from basis size");
  }
  const Eigen::Index k = static_cast<Eigen::Index>(sub.size());
  const Eigen::VectorXd raw = Eigen::Map<const Eigen::VectorXd>(y1.action.data(), k);
  const double action_length = raw.norm();
  if (!(action_length > 0.0)) raise(ErrorKind::kDomain, "extension needs y1 != 0");

  // Work with the unit action a; everything scales back by action_length.
  const Eigen::VectorXd a = raw / action_length;
  const Eigen::VectorXd base = a;  // a . base = 1
  const Eigen::MatrixXd complement = orthogonal_complement(a);
  const Eigen::Index m = k - 1;

  const auto coefficients_of = [&](std::span<const double> w) {
    Eigen::VectorXd c = base;
    if (m > 0) c += complement * Eigen::Map<const Eigen::VectorXd>(w.data(), m);
    return c;
  };

  const Objective objective = [&](std::span<const double> w, std::span<double> grad) {
    const Eigen::VectorXd c = coefficients_of(w);
    const RealFunction x = sub.combine(std::span<const double>(c.data(), static_cast<std::size_t>(k)));
    const double n = norm(model, x);
    if (m > 0) {
      const DualFunctional g = norm_gradient(model, x);
      Eigen::VectorXd full(k);
      for (Eigen::Index j = 0; j < k; ++j) {
        full(j) = pairing(model.space(), g, sub[static_cast<std::size_t>(j)]);
      }
      Eigen::Map<Eigen::VectorXd>(grad.data(), m) = 2.0 * n * complement.transpose() * full;
    }
    return n * n;
  };

  MinimizeOptions mopts;
  mopts.gradient_tolerance = options.gradient_tolerance;
  mopts.max_iterations = options.max_iterations;
  Rng rng = make_rng(options.seed);
  MinimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  int total_iterations = 0;
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    std::vector<double> start(static_cast<std::size_t>(m), 0.0);
    if (r > 0) start = gaussian_vector(rng, static_cast<std::size_t>(m));
    MinimizeResult result = minimize_bfgs(objective, std::move(start), mopts);
    total_iterations += result.iterations;
    if (result.value < best.value) best = std::move(result);
  }

  Extension out;
  const Eigen::VectorXd c = coefficients_of(best.x);
  const RealFunction x = sub.combine(std::span<const double>(c.data(), static_cast<std::size_t>(k)));
  const double n = norm(model, x);
  // sup of y1 over the unit sphere of X1 equals y1(x) / |x| at the minimizer.
  out.subspace_norm = action_length * a.dot(c) / n;
  out.maximizer = (1.0 / n) * x;
  out.maximizer_coefficients.resize(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) out.maximizer_coefficients[static_cast<std::size_t>(j)] = c(j) / n;
  out.functional = out.subspace_norm * norm_gradient(model, out.maximizer);
  out.dual_norm = dual_norm(model, out.functional);
  const SubFunctional check = restrict(model, sub, out.functional);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    out.restriction_defect = std::max(out.restriction_defect, std::abs(check.action[j] - y1.action[j]));
  }
  out.gradient_norm = best.gradient_norm;
  out.iterations = total_iterations;
  out.converged = best.converged;

  // A stalled optimizer is only fatal when the result fails its own contract.
  const double scale = std::max(1.0, out.subspace_norm);
  if (!best.converged && out.restriction_defect > 1e-6 * scale) {
    raise(ErrorKind::kSolverDivergence,
          "subspace maximization stalled: gradient " + std::to_string(best.gradient_norm) +
              ", restriction defect " + std::to_string(out.restriction_defect) + " after " +
              std::to_string(total_iterations) + " iterations");
  }
  return out;
}

std::vector<DualFunctional> annihilator(const MeasureSpace& space, const Subspace& sub) {
  check_dimension(space, sub.ambient_dimension(), "subspace");
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  const Eigen::Index k = static_cast<Eigen::Index>(sub.size());
  Eigen::MatrixXd constraints(k, n);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      constraints(j, i) = sub[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                          space.weight(static_cast<std::size_t>(i));
    }
  }
  // Rows are independent (checked by Subspace), so the kernel has dimension n - k.
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const Eigen::MatrixXd v = svd.matrixV();
  std::vector<DualFunctional> out;
  for (Eigen::Index col = k; col < n; ++col) {
    DualFunctional z = DualFunctional::zeros(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = v(i, col);
    out.push_back(std::move(z));
  }
  return out;
}

UniquenessReport uniqueness_probe(const SpaceModel& model, const Subspace& sub,
                                  const SubFunctional& y1, const DualFunctional& y, int trials,
                                  std::uint64_t seed) {
  check_dimension(model.space(), y.size(), "functional");
  const SubFunctional check = restrict(model, sub, y);
  if (check.action.size() != y1.action.size()) {
    raise(ErrorKind::kDimensionMismatch, "action length differs from basis size");
  }
  double action_scale = 0.0;
  for (double v : y1.action) action_scale = std::max(action_scale, std::abs(v));
  for (std::size_t j = 0; j < check.action.size(); ++j) {
    if (std::abs(check.action[j] - y1.action[j]) > 1e-6 * std::max(1.0, action_scale)) {
      raise(ErrorKind::kDomain, "uniqueness_probe: y does not extend y1");
    }
  }

  UniquenessReport out;
  out.extension_dual_norm = dual_norm(model, y);
  out.best_dual_norm = out.extension_dual_norm;
  const std::vector<DualFunctional> basis = annihilator(model.space(), sub);
  out.annihilator_dimension = basis.size();
  if (basis.empty()) return out;

  const std::size_t m = basis.size();
  const auto candidate = [&](std::span<const double> w) {
    DualFunctional g = y;
    for (std::size_t j = 0; j < m; ++j) g += w[j] * basis[j];
    return g;
  };
  const auto weights = model.space().weights();
  const Objective objective = [&](std::span<const double> w, std::span<double> grad) {
    const DualFunctional g = candidate(w);
    double dn = 0.0;
    // d|g|_* / dg_i = M(g)_i mu_i
    const RealFunction point = duality_point(model, g, &dn);
    for (std::size_t j = 0; j < m; ++j) {
      grad[j] = 2.0 * dn * weighted_dot(basis[j].values(), point.values(), weights);
    }
    return dn * dn;
  };

  double spread = 0.0;
  for (double v : y.values()) spread = std::max(spread, std::abs(v));
  Rng rng = make_rng(seed);
  MinimizeOptions mopts;
  mopts.gradient_tolerance = 1e-13;
  mopts.max_iterations = 500;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> start = gaussian_vector(rng, m);
    for (double& v : start) v *= spread;
    const MinimizeResult result = minimize_bfgs(objective, std::move(start), mopts);
    out.iterations += result.iterations;
    const DualFunctional g = candidate(result.x);
    const double dn = dual_norm(model, g);
    const double distance = dual_norm(model, g - y);
    out.max_distance = std::max(out.max_distance, distance);
    if (dn < out.best_dual_norm || t == 0) {
      out.best_dual_norm = dn;
      out.best_distance = distance;
    }
    ++out.trials;
  }
  return out;
}

}  // namespace dualrep
