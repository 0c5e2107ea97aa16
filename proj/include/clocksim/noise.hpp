#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace clocksim::noise {

// Evenly sampled scalar series (fractional frequency for clocks/links,
// m/s^2 for accelerometers).
struct FrequencySeries {
  double tau0 = 1.0;     // sample interval, s
  double t_start = 0.0;  // epoch of the first sample, s
  std::vector<double> values;

  size_t size() const { return values.size(); }
  double span() const { return tau0 * static_cast<double>(values.size()); }
  // Sample covering the given epoch (samples cover [t_start + i*tau0, +tau0)).
  double value_at(double epoch) const;
};

// Power-law clock model. Coefficients are Allan-deviation anchors:
//   white FM:       adev(tau) = white_fm / sqrt(tau)
//   flicker FM:     adev(tau) = flicker_fm (flat)
//   random-walk FM: adev(tau) = random_walk_fm * sqrt(tau)
//   drift:          adev(tau) = drift_rate * tau / sqrt(2)
// accuracy is a bound on a constant fractional-frequency bias drawn uniformly
// within +/- accuracy once per synthesis run.
struct ClockModel {
  std::string label;
  double white_fm = 0.0;
  double flicker_fm = 0.0;
  double random_walk_fm = 0.0;
  double drift_rate = 0.0;  // fractional frequency per second
  double accuracy = 0.0;
};

struct AccelerometerModel {
  std::string label;
  double white_noise = 0.0;       // m/s^2/sqrt(Hz)
  double bias_uncertainty = 0.0;  // m/s^2, uniform draw bound
};

// Microwave/optical time-transfer link. The time-deviation budget points pin a
// white-FM component fitted in log space; the turbulence coefficient adds a
// white-PM component with adev(tau) = turbulence / tau.
struct LinkNoiseModel {
  std::string label;
  std::vector<std::pair<double, double>> tdev_points;  // (tau s, tdev s), sorted
  double turbulence = 0.0;
};

FrequencySeries synthesize_clock_noise(const ClockModel& model, size_t n, double tau0,
                                       uint64_t seed);

FrequencySeries synthesize_accel_noise(const AccelerometerModel& model, size_t n,
                                       double tau0, uint64_t seed);

FrequencySeries synthesize_link_noise(const LinkNoiseModel& model, size_t n, double tau0,
                                      uint64_t seed);

// Overlapping Allan deviation at the requested averaging times. Each tau must
// be an integer multiple of tau0 and at most a quarter of the span.
std::vector<double> allan_deviation(const FrequencySeries& series,
                                    const std::vector<double>& taus);

// Time deviation tdev(tau) = tau * mdev(tau) / sqrt(3) from the overlapping
// modified Allan variance. Same preconditions as allan_deviation.
std::vector<double> time_deviation(const FrequencySeries& series,
                                   const std::vector<double>& taus);

// Analytic Allan deviation implied by a clock model (quadrature sum of terms).
double clock_adev_model(const ClockModel& model, double tau);

// White-FM coefficient implied by the link's tdev budget points (0 if none).
double link_white_fm_coefficient(const LinkNoiseModel& model);

// Analytic tdev of the synthesized link model at an averaging time.
double link_tdev_model(const LinkNoiseModel& model, double tau);

// Log-log interpolation of the link's budget points themselves (curve
// used for common-view comparison uncertainties).
double link_tdev_budget(const LinkNoiseModel& model, double tau);

// Uniform-draw standard deviation of a bias bound: bound / sqrt(3).
double bias_sigma(double bound);

}  // namespace clocksim::noise
