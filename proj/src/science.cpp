#include "clocksim/science.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/estimation.hpp"

namespace clocksim::science {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_campaign(const ComparisonCampaign& c, bool need_cmb) {
  const size_t n = c.epochs.size();
  if (n < 3) {
    throw domain_error("science", "campaign needs at least 3 sessions");
  }
  if (c.sigma.size() != n || c.grav.size() != n || c.vel.size() != n) {
    throw domain_error("science", "campaign regressor sizes disagree");
  }
  if (need_cmb && c.cmb.size() != n) {
    throw domain_error("science", "campaign has no frame-boost regressor");
  }
  for (double s : c.sigma) {
    if (!(s > 0.0)) {
      throw domain_error("science", "non-positive session sigma");
    }
  }
  if (c.bias_space_bound < 0.0 || c.bias_ground_bound < 0.0) {
    throw domain_error("science", "negative accuracy bound");
  }
}

void check_measured(const ComparisonCampaign& c) {
  if (c.measured.size() != c.epochs.size()) {
    throw domain_error("science", "campaign measurements missing or mismatched");
  }
}

// Weighted fit of a single coefficient. A constant clock offset within the
// accuracy bounds does not average down over sessions, so the reported sigma
// adds the bias bound (as an rms, bound/sqrt(3)) times the fit's sensitivity
// to a constant shift of all measurements.
EstimationResult single_coefficient_fit(const ComparisonCampaign& c,
                                        const std::vector<double>& regressor,
                                        const std::string& test,
                                        const std::string& name) {
  check_measured(c);
  const size_t n = c.epochs.size();
  double sxx = 0.0;
  double sxy = 0.0;
  double sx = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double w = 1.0 / (c.sigma[i] * c.sigma[i]);
    sxx += w * regressor[i] * regressor[i];
    sxy += w * regressor[i] * c.measured[i];
    sx += w * regressor[i];
  }
  if (!(sxx > 0.0)) {
    throw rank_error("science", "regressor vanishes over the campaign");
  }
  const double estimate = sxy / sxx;
  const double sigma_stochastic = std::sqrt(1.0 / sxx);
  const double bias_alias = sx / sxx;
  const double sigma_systematic = c.bias_sigma_total() * std::abs(bias_alias);
  const double sigma_total = std::hypot(sigma_stochastic, sigma_systematic);

  double ss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = c.measured[i] - estimate * regressor[i];
    ss += r * r;
  }

  EstimationResult result;
  result.test = test;
  result.names = {name};
  result.parameters = Eigen::VectorXd::Constant(1, estimate);
  result.sigmas = Eigen::VectorXd::Constant(1, sigma_total);
  result.covariance = Eigen::MatrixXd::Constant(1, 1, sigma_total * sigma_total);
  result.residual_rms = std::sqrt(ss / static_cast<double>(n));
  result.n_obs = n;
  result.extras["sigma_stochastic"] = sigma_stochastic;
  result.extras["sigma_systematic"] = sigma_systematic;
  result.extras["bias_alias"] = bias_alias;
  return result;
}

}  // namespace

double EstimationResult::parameter(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return parameters(static_cast<Eigen::Index>(i));
  }
  throw domain_error("science", "no parameter named " + name);
}

double EstimationResult::sigma_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return sigmas(static_cast<Eigen::Index>(i));
  }
  throw domain_error("science", "no parameter named " + name);
}

double ComparisonCampaign::bias_sigma_total() const {
  return std::sqrt((bias_space_bound * bias_space_bound +
                    bias_ground_bound * bias_ground_bound) / 3.0);
}

void simulate_measurements(ComparisonCampaign& campaign, const CampaignInjections& inject,
                           uint64_t seed) {
  check_campaign(campaign, false);
  const size_t n = campaign.epochs.size();
  const bool has_cmb = campaign.cmb.size() == n;

  std::mt19937_64 rng(seed);
  // Draw order is fixed (biases first, then session noise) so results are
  // reproducible per seed.
  std::uniform_real_distribution<double> u_space(-campaign.bias_space_bound,
                                                 campaign.bias_space_bound);
  std::uniform_real_distribution<double> u_ground(-campaign.bias_ground_bound,
                                                  campaign.bias_ground_bound);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double bias = (u_space(rng) - u_ground(rng)) * inject.noise_scale;

  campaign.measured.assign(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    double y = inject.epsilon * campaign.grav[i] + inject.lorentz * campaign.vel[i] +
               inject.k_alpha * campaign.k_sensitivity * campaign.grav[i];
    if (has_cmb) y += inject.cmb * campaign.cmb[i];
    y += bias + inject.noise_scale * campaign.sigma[i] * gauss(rng);
    campaign.measured[i] = y;
  }
}

EstimationResult redshift_test(const ComparisonCampaign& campaign) {
  check_campaign(campaign, false);
  return single_coefficient_fit(campaign, campaign.grav, "redshift", "epsilon");
}

EstimationResult lorentz_test(const ComparisonCampaign& campaign, LorentzFrame frame) {
  check_campaign(campaign, frame == LorentzFrame::cmb);
  if (frame == LorentzFrame::cmb) {
    return single_coefficient_fit(campaign, campaign.cmb, "lorentz_cmb", "boost_coefficient");
  }
  return single_coefficient_fit(campaign, campaign.vel, "lorentz", "velocity_coefficient");
}

EstimationResult alpha_variation(const ComparisonCampaign& campaign) {
  check_campaign(campaign, false);
  if (!(campaign.k_sensitivity > 0.0)) {
    throw domain_error("science", "transition sensitivity must be positive");
  }
  const auto [lo, hi] = std::minmax_element(campaign.grav.begin(), campaign.grav.end());
  const double accuracy = std::max(campaign.bias_space_bound, campaign.bias_ground_bound);
  if (*hi - *lo <= 10.0 * accuracy) {
    throw rank_error("science", "potential variation below 10x the clock accuracy");
  }
  std::vector<double> regressor(campaign.grav.size());
  for (size_t i = 0; i < regressor.size(); ++i) {
    regressor[i] = campaign.k_sensitivity * campaign.grav[i];
  }
  return single_coefficient_fit(campaign, regressor, "alpha", "k_alpha");
}

void simulate_drift_measurements(DriftCampaign& campaign, double drift_per_year,
                                 uint64_t seed) {
  const size_t n = campaign.epochs.size();
  if (n < 3) {
    throw domain_error("science", "drift campaign needs at least 3 sessions");
  }
  if (campaign.sigma.size() != n) {
    throw domain_error("science", "drift campaign sigma size mismatch");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  campaign.measured.assign(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    if (!(campaign.sigma[i] > 0.0)) {
      throw domain_error("science", "non-positive session sigma");
    }
    campaign.measured[i] = drift_per_year * campaign.epochs[i] / constants::year +
                           campaign.sigma[i] * gauss(rng);
  }
}

EstimationResult alpha_drift(const DriftCampaign& campaign) {
  const size_t n = campaign.epochs.size();
  if (campaign.measured.size() != n || campaign.sigma.size() != n || n < 3) {
    throw domain_error("science", "drift campaign incomplete");
  }
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd y(n);
  Eigen::VectorXd sigma(n);
  for (size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = campaign.epochs[i] / constants::year;
    y(i) = campaign.measured[i];
    sigma(i) = campaign.sigma[i];
  }
  const auto fit = estimation::wls_fit(design, y, sigma);

  EstimationResult result;
  result.test = "alpha_drift";
  result.names = {"offset", "drift_per_year"};
  result.parameters = fit.parameters;
  result.covariance = fit.covariance;
  result.sigmas = fit.covariance.diagonal().cwiseSqrt();
  result.residual_rms = fit.residual_rms;
  result.n_obs = fit.n_obs;
  return result;
}

EstimationResult ppn_gamma_conjunction(const ConjunctionDesign& design, uint64_t seed) {
  const size_t n = design.epochs.size();
  if (n < 8) {
    throw domain_error("science", "conjunction design needs at least 8 points");
  }
  if (design.shapiro_rate.size() != n || design.sigma.size() != n) {
    throw domain_error("science", "conjunction design sizes disagree");
  }
  double peak = 0.0;
  for (double s : design.shapiro_rate) peak = std::max(peak, std::abs(s));
  if (!(peak > 0.0)) {
    throw domain_error("science", "no conjunction signature in the span");
  }

  double t_mean = 0.0;
  for (double t : design.epochs) t_mean += t;
  t_mean /= static_cast<double>(n);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u_bias(-design.accel_bias_bound,
                                                design.accel_bias_bound);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double accel_bias = u_bias(rng) * design.noise_scale;

  Eigen::MatrixXd columns(n, 3);
  Eigen::VectorXd y(n);
  Eigen::VectorXd sigma(n);
  for (size_t i = 0; i < n; ++i) {
    const double tc = design.epochs[i] - t_mean;
    columns(i, 0) = design.shapiro_rate[i];
    columns(i, 1) = 1.0;
    columns(i, 2) = tc;
    sigma(i) = design.sigma[i];
    // An uncalibrated accelerometer bias integrates to a velocity ramp,
    // i.e. a linear trend in fractional frequency; the trend column
    // absorbs it.
    y(i) = (1.0 + design.injected_gamma) * design.shapiro_rate[i] +
           (accel_bias / constants::c) * tc +
           design.noise_scale * design.sigma[i] * gauss(rng);
  }
  const auto fit = estimation::wls_fit(columns, y, sigma);

  EstimationResult result;
  result.test = "gamma";
  result.names = {"gamma", "offset", "trend"};
  result.parameters = fit.parameters;
  result.parameters(0) -= 1.0;  // the column carries (1 + gamma)
  result.covariance = fit.covariance;
  result.sigmas = fit.covariance.diagonal().cwiseSqrt();
  result.residual_rms = fit.residual_rms;
  result.n_obs = fit.n_obs;
  result.extras["peak_shapiro_rate"] = peak;
  return result;
}

EstimationResult anomaly_mapping(const AnomalyDesign& design, uint64_t seed) {
  const size_t n = design.window_truth.size();
  if (n == 0 || design.window_bin.size() != n) {
    throw domain_error("science", "anomaly design has no windows");
  }
  if (design.n_bins == 0 || design.bin_radius.size() != design.n_bins) {
    throw domain_error("science", "anomaly design bin layout invalid");
  }
  if (!(design.window_duration > 0.0)) {
    throw domain_error("science", "window duration must be positive");
  }
  if (design.accel_white < 0.0 || design.accel_bias_bound < 0.0 ||
      design.clock_sigma_window < 0.0) {
    throw domain_error("science", "negative noise level");
  }

  const double sigma_window = std::hypot(design.accel_white / std::sqrt(design.window_duration),
                                         design.clock_sigma_window);
  const double bias_var = design.accel_bias_bound * design.accel_bias_bound / 3.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u_bias(-design.accel_bias_bound,
                                                design.accel_bias_bound);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double bias = u_bias(rng) * design.noise_scale;

  std::vector<double> sum(design.n_bins, 0.0);
  std::vector<size_t> count(design.n_bins, 0);
  for (size_t i = 0; i < n; ++i) {
    const int b = design.window_bin[i];
    if (b < 0 || static_cast<size_t>(b) >= design.n_bins) {
      throw domain_error("science", "window bin index out of range");
    }
    const double measured = design.window_truth[i] + bias +
                            design.noise_scale * sigma_window * gauss(rng);
    sum[static_cast<size_t>(b)] += measured;
    count[static_cast<size_t>(b)] += 1;
  }

  // Bins without windows are omitted rather than reported as zero.
  std::vector<size_t> populated;
  for (size_t b = 0; b < design.n_bins; ++b) {
    if (count[b] > 0) populated.push_back(b);
  }
  if (populated.empty()) {
    throw domain_error("science", "no populated bins");
  }

  const auto m = static_cast<Eigen::Index>(populated.size());
  EstimationResult result;
  result.test = "anomaly";
  result.parameters = Eigen::VectorXd(m);
  result.sigmas = Eigen::VectorXd(m);
  result.covariance = Eigen::MatrixXd(m, m);
  double max_abs_z = 0.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    const size_t b = populated[static_cast<size_t>(j)];
    const double mean = sum[b] / static_cast<double>(count[b]);
    const double var_white = sigma_window * sigma_window / static_cast<double>(count[b]);
    const double sig = std::sqrt(bias_var + var_white);
    result.names.push_back("a_bin_" + std::to_string(b));
    result.parameters(j) = mean;
    result.sigmas(j) = sig;
    result.extras["radius_bin_" + std::to_string(b)] = design.bin_radius[b];
    result.extras["n_bin_" + std::to_string(b)] = static_cast<double>(count[b]);
    max_abs_z = std::max(max_abs_z, std::abs(mean) / sig);
    for (Eigen::Index i = 0; i < m; ++i) {
      // The accelerometer bias is common to every bin.
      result.covariance(i, j) = bias_var;
    }
    result.covariance(j, j) = sig * sig;
  }
  result.n_obs = n;
  result.extras["max_abs_z"] = max_abs_z;
  result.extras["n_windows"] = static_cast<double>(n);
  return result;
}

namespace {

struct BeltFramePoint {
  double rho;  // horizontal distance from the belt axis
  double z;    // height above the belt plane
};

BeltFramePoint to_belt_frame(const KuiperBeltModel& model, const Vec3& p) {
  // Belt plane tilted about the y axis; normal (sin i, 0, cos i).
  const double ci = std::cos(model.plane_inclination);
  const double si = std::sin(model.plane_inclination);
  const double u = ci * p.x() - si * p.z();
  const double v = p.y();
  const double z = si * p.x() + ci * p.z();
  return {std::hypot(u, v), z};
}

// Mean of 1/distance over a circle of radius r, field point at (rho, z),
// by midpoint rule on the periodic integrand with node doubling.
double ring_mean_inverse_distance(double r, double rho, double z) {
  const double base = rho * rho + r * r + z * z;
  auto eval = [&](size_t n_nodes) {
    double acc = 0.0;
    for (size_t k = 0; k < n_nodes; ++k) {
      const double theta = (static_cast<double>(k) + 0.5) * pi / static_cast<double>(n_nodes);
      acc += 1.0 / std::sqrt(base - 2.0 * rho * r * std::cos(theta));
    }
    return acc / static_cast<double>(n_nodes);
  };
  double prev = eval(64);
  for (size_t n_nodes = 128; n_nodes <= (1u << 22); n_nodes *= 2) {
    const double cur = eval(n_nodes);
    if (std::abs(cur - prev) <= 1e-10 * std::abs(cur) + 1e-300) {
      return cur;
    }
    prev = cur;
  }
  throw numeric_error("science", "ring potential quadrature did not converge");
}

double thin_ring_potential(double gm, double r, double rho, double z) {
  if (std::hypot(rho - r, z) < 1e-9 * r) {
    throw singularity_error("science", "field point on the ring");
  }
  return gm * ring_mean_inverse_distance(r, rho, z);
}

// Annulus potential via rays from the field point's in-plane projection:
// integrating the surface density over distance s along a ray gives
// sqrt(s^2+z^2) evaluated at the chord ends, leaving a single smooth
// azimuthal integral. This stays regular even for in-plane field points.
double annulus_potential(double gm, double r1, double r2, double rho, double z) {
  const double density = gm / (pi * (r2 * r2 - r1 * r1));

  auto chord = [&](double r, double cphi, double& s_lo, double& s_hi) {
    // Intersections of |projection + s*dir| = r, s real.
    const double disc = rho * rho * (cphi * cphi - 1.0) + r * r;
    if (disc < 0.0) return false;
    const double root = std::sqrt(disc);
    s_lo = -rho * cphi - root;
    s_hi = -rho * cphi + root;
    return s_hi > 0.0;
  };
  auto height = [&](double s) { return std::sqrt(s * s + z * z); };

  auto integrand = [&](double phi) {
    const double cphi = std::cos(phi);
    double a2 = 0.0;
    double b2 = 0.0;
    if (!chord(r2, cphi, a2, b2)) return 0.0;
    a2 = std::max(a2, 0.0);
    double a1 = 0.0;
    double b1 = 0.0;
    double acc = 0.0;
    if (chord(r1, cphi, a1, b1) && b1 > a2) {
      a1 = std::max(a1, a2);
      acc += height(a1) - height(a2);          // segment before the hole
      if (b2 > b1) acc += height(b2) - height(b1);  // segment after the hole
    } else {
      acc += height(b2) - height(a2);
    }
    return acc;
  };

  auto eval = [&](size_t n_nodes) {
    double acc = 0.0;
    for (size_t k = 0; k < n_nodes; ++k) {
      const double phi = (static_cast<double>(k) + 0.5) * 2.0 * pi / static_cast<double>(n_nodes);
      acc += integrand(phi);
    }
    return density * 2.0 * pi * acc / static_cast<double>(n_nodes);
  };
  double prev = eval(64);
  for (size_t n_nodes = 128; n_nodes <= (1u << 22); n_nodes *= 2) {
    const double cur = eval(n_nodes);
    if (std::abs(cur - prev) <= 1e-8 * std::abs(cur) + 1e-300) {
      return cur;
    }
    prev = cur;
  }
  throw numeric_error("science", "annulus potential quadrature did not converge");
}

}  // namespace

double kuiper_potential(const KuiperBeltModel& model, const Vec3& position) {
  if (model.gm < 0.0 || model.gm > constants::gm_earth) {
    throw domain_error("science", "belt mass outside [0, 1 Earth mass]");
  }
  if (!(model.inner_radius > 0.0)) {
    throw domain_error("science", "belt radius must be positive");
  }
  const auto [rho, z] = to_belt_frame(model, position);
  switch (model.distribution) {
    case BeltDistribution::thin_ring:
      return thin_ring_potential(model.gm, model.inner_radius, rho, z);
    case BeltDistribution::annulus:
      if (!(model.outer_radius > model.inner_radius)) {
        throw domain_error("science", "annulus needs inner radius < outer radius");
      }
      return annulus_potential(model.gm, model.inner_radius, model.outer_radius, rho, z);
    case BeltDistribution::two_ring:
      if (!(model.outer_radius > model.inner_radius)) {
        throw domain_error("science", "two-ring model needs inner radius < outer radius");
      }
      return thin_ring_potential(0.5 * model.gm, model.inner_radius, rho, z) +
             thin_ring_potential(0.5 * model.gm, model.outer_radius, rho, z);
  }
  throw domain_error("science", "unknown belt distribution");
}

KboDetectability kbo_detectability(double gm, double distance, double clock_floor,
                                   double accel_floor) {
  if (gm < 0.0) {
    throw domain_error("science", "negative GM");
  }
  if (!(distance > 0.0) || !(clock_floor > 0.0) || !(accel_floor > 0.0)) {
    throw domain_error("science", "distance and instrument floors must be positive");
  }
  KboDetectability out;
  out.crossover_radius = clock_floor * constants::c2 / accel_floor;
  out.acceleration_signal = gm / (distance * distance);
  out.potential_signal = gm / (distance * constants::c2);
  if (gm == 0.0) {
    out.rel_sigma_acceleration = std::numeric_limits<double>::infinity();
    out.rel_sigma_potential = std::numeric_limits<double>::infinity();
    out.rel_sigma = std::numeric_limits<double>::infinity();
    out.preferred_channel = "none";
    return out;
  }
  out.rel_sigma_acceleration = accel_floor / out.acceleration_signal;
  out.rel_sigma_potential = clock_floor / out.potential_signal;
  if (out.rel_sigma_acceleration <= out.rel_sigma_potential) {
    out.rel_sigma = out.rel_sigma_acceleration;
    out.preferred_channel = "acceleration";
  } else {
    out.rel_sigma = out.rel_sigma_potential;
    out.preferred_channel = "frequency";
  }
  return out;
}

GwCurve gw_sensitivity(double clock_white_fm, double accel_white, double f_low,
                       double f_high, size_t n_points, double template_duration) {
  if (!(clock_white_fm > 0.0) || accel_white < 0.0) {
    throw domain_error("science", "invalid noise levels");
  }
  if (!(f_low >= 1e-6) || !(f_high <= 1e-2) || !(f_low < f_high)) {
    throw domain_error("science", "band outside [1e-6, 1e-2] Hz");
  }
  if (n_points < 2) {
    throw domain_error("science", "need at least 2 frequency points");
  }
  if (!(template_duration > 0.0)) {
    throw domain_error("science", "template duration must be positive");
  }

  GwCurve curve;
  // One-sided white-FM PSD: S_y = 2 sigma1^2, flat in f.
  curve.floor_asd = std::sqrt(2.0) * clock_white_fm;
  curve.corner_frequency =
      accel_white > 0.0 ? accel_white / (2.0 * pi * constants::c * curve.floor_asd) : 0.0;
  curve.template_floor = curve.floor_asd / std::sqrt(template_duration);

  const double log_lo = std::log(f_low);
  const double log_hi = std::log(f_high);
  curve.frequency.resize(n_points);
  curve.strain_asd.resize(n_points);
  curve.template_limit.resize(n_points);
  for (size_t i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n_points - 1);
    const double f = std::exp(log_lo + frac * (log_hi - log_lo));
    // Accelerometer noise enters through the velocity it integrates to,
    // rising as 1/f toward low frequency.
    const double accel_term = accel_white / (2.0 * pi * f * constants::c);
    const double asd = std::sqrt(2.0 * clock_white_fm * clock_white_fm + accel_term * accel_term);
    curve.frequency[i] = f;
    curve.strain_asd[i] = asd;
    curve.template_limit[i] = asd / std::sqrt(template_duration);
  }
  return curve;
}

double light_speed_isotropy_resolution(double link_tdev, double time_of_flight,
                                       size_t n_passes) {
  if (!(link_tdev > 0.0) || !(time_of_flight > 0.0) || n_passes == 0) {
    throw domain_error("science", "invalid isotropy budget inputs");
  }
  return link_tdev / time_of_flight / std::sqrt(static_cast<double>(n_passes));
}

MonteCarloSummary run_monte_carlo(const std::function<EstimationResult(uint64_t)>& run,
                                  size_t n_runs, uint64_t base_seed) {
  if (n_runs < 2) {
    throw domain_error("science", "Monte Carlo needs at least 2 runs");
  }
  MonteCarloSummary summary;
  summary.n_runs = n_runs;

  Eigen::MatrixXd estimates;
  Eigen::MatrixXd reported;
  for (size_t i = 0; i < n_runs; ++i) {
    const EstimationResult res = run(base_seed + i);
    if (i == 0) {
      summary.names = res.names;
      estimates.resize(n_runs, res.parameters.size());
      reported.resize(n_runs, res.parameters.size());
    } else if (res.names != summary.names) {
      throw numeric_error("science", "Monte Carlo runs disagree on parameter layout");
    }
    estimates.row(static_cast<Eigen::Index>(i)) = res.parameters.transpose();
    reported.row(static_cast<Eigen::Index>(i)) = res.sigmas.transpose();
  }

  const auto k = estimates.cols();
  summary.mean_estimate = estimates.colwise().mean();
  summary.mean_reported_sigma = reported.colwise().mean();
  summary.scatter = Eigen::VectorXd(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double mean = summary.mean_estimate(j);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < estimates.rows(); ++i) {
      const double d = estimates(i, j) - mean;
      acc += d * d;
    }
    summary.scatter(j) = std::sqrt(acc / static_cast<double>(n_runs - 1));
  }
  return summary;
}

}  // namespace clocksim::science
