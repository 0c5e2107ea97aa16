#include "clocksim/estimation.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "clocksim/errors.hpp"

namespace clocksim::estimation {

FitResult wls_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& observations,
                  const Eigen::VectorXd& sigma) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (n == 0 || k == 0) {
    throw domain_error("estimation", "empty design matrix");
  }
  if (observations.size() != n || sigma.size() != n) {
    throw domain_error("estimation", "design, observations and sigma sizes disagree");
  }
  if (n < k) {
    throw rank_error("estimation", "fewer observations than parameters");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(sigma(i) > 0.0)) {
      throw domain_error("estimation", "non-positive measurement sigma");
    }
  }

  const Eigen::VectorXd w = sigma.cwiseInverse();
  Eigen::MatrixXd a = design.array().colwise() * w.array();
  const Eigen::VectorXd b = observations.cwiseProduct(w);

  // Columns of a physical design matrix can differ by many orders of
  // magnitude; equilibrate so the conditioning test measures genuine
  // degeneracy rather than unit choices.
  Eigen::VectorXd col_scale(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    col_scale(j) = a.col(j).norm();
    if (!(col_scale(j) > 0.0)) {
      throw rank_error("estimation", "design column is identically zero");
    }
    a.col(j) /= col_scale(j);
  }

  const Eigen::MatrixXd normal = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal);
  if (eig.info() != Eigen::Success) {
    throw numeric_error("estimation", "normal-matrix eigendecomposition failed");
  }
  const double ev_min = eig.eigenvalues().minCoeff();
  const double ev_max = eig.eigenvalues().maxCoeff();
  if (!(ev_min > 0.0) || ev_max / ev_min > 1e12) {
    throw rank_error("estimation", "design matrix is rank deficient or too ill-conditioned");
  }

  const Eigen::MatrixXd cov_scaled = normal.inverse();
  const Eigen::VectorXd rhs = a.transpose() * b;
  Eigen::VectorXd params_scaled = cov_scaled * rhs;

  FitResult result;
  result.parameters = params_scaled.cwiseQuotient(col_scale);
  result.covariance = Eigen::MatrixXd(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      result.covariance(i, j) = cov_scaled(i, j) / (col_scale(i) * col_scale(j));
    }
  }
  const Eigen::VectorXd residual = observations - design * result.parameters;
  result.residual_rms = std::sqrt(residual.squaredNorm() / static_cast<double>(n));
  result.chi2 = residual.cwiseProduct(w).squaredNorm();
  result.n_obs = static_cast<size_t>(n);
  return result;
}

}  // namespace clocksim::estimation
