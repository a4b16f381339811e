#include "dualrep/minimize.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace dualrep {

MinimizeResult minimize_bfgs(const Objective& objective, std::vector<double> x0,
                             const MinimizeOptions& options) {
  const Eigen::Index n = static_cast<Eigen::Index>(x0.size());
  MinimizeResult out;
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
  Eigen::VectorXd grad(n);
  const auto evaluate = [&](const Eigen::VectorXd& at, Eigen::VectorXd& g) {
    ++out.evaluations;
    return objective(std::span<const double>(at.data(), static_cast<std::size_t>(n)),
                     std::span<double>(g.data(), static_cast<std::size_t>(n)));
  };

  double value = evaluate(x, grad);
  const auto write_back = [&] {
    out.x.assign(x.data(), x.data() + n);
    out.value = value;
    out.gradient_norm = grad.norm();
  };
  if (n == 0) {
    out.converged = true;
    write_back();
    return out;
  }

  Eigen::MatrixXd inverse_hessian = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true;
  Eigen::VectorXd trial(n);
  Eigen::VectorXd trial_grad(n);

  for (out.iterations = 0; out.iterations < options.max_iterations; ++out.iterations) {
    if (grad.norm() <= options.gradient_tolerance * std::max(1.0, std::abs(value))) {
      out.converged = true;
      break;
    }
    Eigen::VectorXd direction = -inverse_hessian * grad;
    double slope = grad.dot(direction);
    if (!(slope < 0.0)) {
      inverse_hessian.setIdentity();
      fresh = true;
      direction = -grad;
      slope = -grad.squaredNorm();
    }

    bool accepted = false;
    double step = 1.0;
    double trial_value = value;
    for (int k = 0; k < options.max_backtracks; ++k, step *= 0.5) {
      trial = x + step * direction;
      trial_value = evaluate(trial, trial_grad);
      if (!std::isfinite(trial_value)) continue;
      if (trial_value <= value + options.armijo * step * slope) {
        accepted = true;
        break;
      }
      const bool within_noise = std::abs(trial_value - value) <= 1e-14 * std::max(1.0, std::abs(value));
      if (within_noise && trial_grad.norm() < grad.norm()) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (fresh) break;
      inverse_hessian.setIdentity();
      fresh = true;
      continue;
    }

    const Eigen::VectorXd s = trial - x;
    const Eigen::VectorXd y = trial_grad - grad;
    const double sy = s.dot(y);
    x = trial;
    grad = trial_grad;
    value = trial_value;
    if (sy > 1e-300 && std::isfinite(sy)) {
      if (fresh) {
        inverse_hessian *= sy / y.squaredNorm();
        fresh = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
      inverse_hessian = left * inverse_hessian * left.transpose() + rho * s * s.transpose();
    }
  }
  if (!out.converged) {
    out.converged = grad.norm() <= options.gradient_tolerance * std::max(1.0, std::abs(value));
  }
  write_back();
  return out;
}

}  // namespace dualrep
