#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clocksim/state.hpp"

namespace clocksim::science {

struct EstimationResult {
  std::string test;
  std::vector<std::string> names;
  Eigen::VectorXd parameters;
  Eigen::VectorXd sigmas;       // sqrt of covariance diagonal
  Eigen::MatrixXd covariance;
  double residual_rms = 0.0;
  size_t n_obs = 0;
  std::map<std::string, double> extras;

  double parameter(const std::string& name) const;
  double sigma_of(const std::string& name) const;
};

// Session-averaged clock-comparison campaign. `measured` holds residuals
// after subtracting the unit-GR prediction, so each physics parameter
// multiplies its regressor directly. The accuracy bounds describe constant
// per-run clock biases (uniform draws) that do not average down.
struct ComparisonCampaign {
  std::vector<double> epochs;   // s
  std::vector<double> sigma;    // per-session stochastic sigma (fractional freq)
  std::vector<double> grav;     // potential-difference regressor, Delta w / c^2
  std::vector<double> vel;      // velocity-term regressor, Delta v^2 / 2 c^2
  std::vector<double> cmb;      // frame-boost regressor (empty if unused)
  double k_sensitivity = 0.0;   // d(ln f_ratio) / d(ln alpha) style coefficient
  double bias_space_bound = 0.0;
  double bias_ground_bound = 0.0;
  std::vector<double> measured;  // filled by simulate_measurements

  double bias_sigma_total() const;
};

struct CampaignInjections {
  double epsilon = 0.0;   // redshift-term scaling deviation
  double lorentz = 0.0;   // velocity-term scaling deviation
  double cmb = 0.0;       // boost-coupling coefficient
  double k_alpha = 0.0;   // constant-coupling coefficient
  double noise_scale = 1.0;
};

void simulate_measurements(ComparisonCampaign& campaign, const CampaignInjections& inject,
                           uint64_t seed);

// Single-coefficient weighted fits on a campaign regressor. The reported
// sigma combines the stochastic fit uncertainty with the clock-bias alias
// (bias sigma times the fit's sensitivity to a constant offset).
EstimationResult redshift_test(const ComparisonCampaign& campaign);

enum class LorentzFrame { none, cmb };

EstimationResult lorentz_test(const ComparisonCampaign& campaign, LorentzFrame frame);

EstimationResult alpha_variation(const ComparisonCampaign& campaign);

// Linear temporal drift fit on ground-network comparison sessions.
struct DriftCampaign {
  std::vector<double> epochs;    // s
  std::vector<double> sigma;     // per-session resolution
  std::vector<double> measured;  // filled by simulate_drift_measurements
};

void simulate_drift_measurements(DriftCampaign& campaign, double drift_per_year,
                                 uint64_t seed);

EstimationResult alpha_drift(const DriftCampaign& campaign);

// Solar-conjunction Doppler fit for the light-bending/time-delay parameter.
// The regressor is the two-way Shapiro rate per unit (1 + gamma); offset and
// linear-trend nuisance columns absorb instrumental drifts.
struct ConjunctionDesign {
  std::vector<double> epochs;      // s, centered on the conjunction
  std::vector<double> shapiro_rate;  // per unit (1+gamma), fractional frequency
  std::vector<double> sigma;       // per-point stochastic sigma
  double accel_bias_bound = 0.0;   // m/s^2, drives a linear trend in the data
  double injected_gamma = 1.0;
  double noise_scale = 1.0;
};

EstimationResult ppn_gamma_conjunction(const ConjunctionDesign& design, uint64_t seed);

// Radial-bin anomalous-acceleration map from windowed velocity residuals.
struct AnomalyDesign {
  std::vector<double> window_truth;  // mean anomalous accel per window, m/s^2
  std::vector<int> window_bin;       // bin index per window
  std::vector<double> bin_radius;    // representative radius per bin, m
  size_t n_bins = 0;
  double window_duration = 86400.0;  // s
  double accel_white = 0.0;          // m/s^2/sqrt(Hz)
  double accel_bias_bound = 0.0;     // m/s^2
  double clock_sigma_window = 0.0;   // equivalent accel noise from the link, m/s^2
  double noise_scale = 1.0;
};

EstimationResult anomaly_mapping(const AnomalyDesign& design, uint64_t seed);

// Kuiper-belt mass distributions.
enum class BeltDistribution { thin_ring, annulus, two_ring };

struct KuiperBeltModel {
  double gm = 0.0;             // m^3/s^2, total
  double inner_radius = 0.0;   // m
  double outer_radius = 0.0;   // m
  BeltDistribution distribution = BeltDistribution::thin_ring;
  double plane_inclination = 0.0;  // rad, belt plane vs the frame x-y plane
};

// Newtonian potential (>= 0) of the belt at a field position, by adaptive
// quadrature over the distribution.
double kuiper_potential(const KuiperBeltModel& model, const Vec3& position);

struct KboDetectability {
  double crossover_radius = 0.0;   // m, equal-sensitivity distance
  double acceleration_signal = 0.0;  // m/s^2 at the probe distance
  double potential_signal = 0.0;     // fractional frequency at the probe distance
  double rel_sigma_acceleration = 0.0;
  double rel_sigma_potential = 0.0;
  double rel_sigma = 0.0;          // best of the two channels
  std::string preferred_channel;
};

KboDetectability kbo_detectability(double gm, double distance, double clock_floor = 1e-17,
                                   double accel_floor = 5e-12);

struct GwCurve {
  std::vector<double> frequency;       // Hz
  std::vector<double> strain_asd;      // 1/sqrt(Hz)
  std::vector<double> template_limit;  // dimensionless strain
  double floor_asd = 0.0;
  double corner_frequency = 0.0;       // Hz
  double template_floor = 0.0;
};

// Doppler-link gravitational-wave sensitivity: white clock floor plus the
// accelerometer's f^-1 rise, with a matched-filter template limit over an
// integration time. Band must lie within [1e-6, 1e-2] Hz.
GwCurve gw_sensitivity(double clock_white_fm, double accel_white, double f_low,
                       double f_high, size_t n_points, double template_duration);

// Light-speed isotropy resolution of a timed one-way link budget.
double light_speed_isotropy_resolution(double link_tdev, double time_of_flight,
                                       size_t n_passes);

struct MonteCarloSummary {
  std::vector<std::string> names;
  Eigen::VectorXd mean_estimate;
  Eigen::VectorXd scatter;              // sample std over runs
  Eigen::VectorXd mean_reported_sigma;
  size_t n_runs = 0;
};

// Runs an estimator across consecutive seeds and summarizes estimate scatter
// against the mean reported sigma. Results are merged in seed order, so the
// summary is independent of execution interleaving.
MonteCarloSummary run_monte_carlo(const std::function<EstimationResult(uint64_t)>& run,
                                  size_t n_runs, uint64_t base_seed);

}  // namespace clocksim::science
