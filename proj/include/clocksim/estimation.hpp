#pragma once

#include <Eigen/Dense>

namespace clocksim::estimation {

struct FitResult {
  Eigen::VectorXd parameters;
  Eigen::MatrixXd covariance;
  double residual_rms = 0.0;
  double chi2 = 0.0;
  size_t n_obs = 0;
};

// Weighted linear least squares with per-observation standard deviations.
// Throws rank_error when the normal equations are singular or the condition
// number exceeds 1e12.
FitResult wls_fit(const Eigen::MatrixXd& jacobian, const Eigen::VectorXd& observations,
                  const Eigen::VectorXd& sigmas);

}  // namespace clocksim::estimation
