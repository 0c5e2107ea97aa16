#include "clocksim/noise.hpp"

#include <cmath>
#include <random>

#include "clocksim/errors.hpp"

namespace clocksim::noise {

namespace {

// Flicker FM is realized as a sum of first-order (Ornstein-Uhlenbeck) stages
// with time constants log-spaced at two per decade across six decades above
// the sample interval. Equal per-stage variance yields S_y ~ 1/f across the
// band; the per-stage sigma below calibrates the flat Allan deviation to the
// model coefficient:  adev = sigma_stage * sqrt(2 ln2 / ln sqrt(10)).
constexpr int flicker_stages = 13;
constexpr double flicker_stage_scale = 0.9113061;  // 1 / sqrt(2 ln2 / ln sqrt(10))

std::vector<double> phase_from_frequency(const FrequencySeries& s) {
  std::vector<double> x(s.values.size() + 1);
  x[0] = 0.0;
  for (size_t i = 0; i < s.values.size(); ++i) x[i + 1] = x[i] + s.values[i] * s.tau0;
  return x;
}

size_t tau_to_m(const FrequencySeries& s, double tau) {
  double ratio = tau / s.tau0;
  double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * std::max(1.0, ratio))
    throw domain_error("noise", "tau must be a positive integer multiple of tau0");
  if (tau > s.span() / 4.0)
    throw domain_error("noise", "tau exceeds a quarter of the series span");
  return static_cast<size_t>(rounded);
}

}  // namespace

double FrequencySeries::value_at(double epoch) const {
  double idx = std::floor((epoch - t_start) / tau0);
  if (idx < 0.0 || idx >= static_cast<double>(values.size()))
    throw domain_error("noise", "epoch outside series coverage");
  return values[static_cast<size_t>(idx)];
}

FrequencySeries synthesize_clock_noise(const ClockModel& model, size_t n, double tau0,
                                       uint64_t seed) {
  if (n == 0 || tau0 <= 0.0) throw domain_error("noise", "need n > 0 and tau0 > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double bias = model.accuracy > 0.0 ? model.accuracy * uni(rng) : 0.0;

  double white_sigma = model.white_fm / std::sqrt(tau0);
  double rw_q = model.random_walk_fm * std::sqrt(3.0 * tau0);

  double stage_sigma = model.flicker_fm * flicker_stage_scale;
  double stage_state[flicker_stages];
  double stage_rho[flicker_stages];
  double stage_feed[flicker_stages];
  if (model.flicker_fm > 0.0) {
    for (int j = 0; j < flicker_stages; ++j) {
      double corner = tau0 * std::pow(10.0, 0.5 * j);
      stage_rho[j] = std::exp(-tau0 / corner);
      stage_feed[j] = stage_sigma * std::sqrt(1.0 - stage_rho[j] * stage_rho[j]);
      stage_state[j] = stage_sigma * gauss(rng);  // stationary start
    }
  }

  FrequencySeries out;
  out.tau0 = tau0;
  out.values.resize(n);
  double rw = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double y = bias + model.drift_rate * (static_cast<double>(i) + 0.5) * tau0;
    if (model.white_fm > 0.0) y += white_sigma * gauss(rng);
    if (model.random_walk_fm > 0.0) {
      rw += rw_q * gauss(rng);
      y += rw;
    }
    if (model.flicker_fm > 0.0) {
      for (int j = 0; j < flicker_stages; ++j) {
        stage_state[j] = stage_rho[j] * stage_state[j] + stage_feed[j] * gauss(rng);
        y += stage_state[j];
      }
    }
    out.values[i] = y;
  }
  return out;
}

FrequencySeries synthesize_accel_noise(const AccelerometerModel& model, size_t n,
                                       double tau0, uint64_t seed) {
  if (n == 0 || tau0 <= 0.0) throw domain_error("noise", "need n > 0 and tau0 > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double bias = model.bias_uncertainty > 0.0 ? model.bias_uncertainty * uni(rng) : 0.0;
  double sigma = model.white_noise / std::sqrt(tau0);
  FrequencySeries out;
  out.tau0 = tau0;
  out.values.resize(n);
  for (size_t i = 0; i < n; ++i) out.values[i] = bias + sigma * gauss(rng);
  return out;
}

FrequencySeries synthesize_link_noise(const LinkNoiseModel& model, size_t n, double tau0,
                                      uint64_t seed) {
  if (n == 0 || tau0 <= 0.0) throw domain_error("noise", "need n > 0 and tau0 > 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  FrequencySeries out;
  out.tau0 = tau0;
  out.values.assign(n, 0.0);

  double wfm = link_white_fm_coefficient(model);
  if (wfm > 0.0) {
    double sigma = wfm / std::sqrt(tau0);
    for (size_t i = 0; i < n; ++i) out.values[i] += sigma * gauss(rng);
  }
  if (model.turbulence > 0.0) {
    // White phase noise: adev = sqrt(3) sigma_x / tau.
    double sigma_x = model.turbulence / std::sqrt(3.0);
    double prev = sigma_x * gauss(rng);
    for (size_t i = 0; i < n; ++i) {
      double next = sigma_x * gauss(rng);
      out.values[i] += (next - prev) / tau0;
      prev = next;
    }
  }
  return out;
}

std::vector<double> allan_deviation(const FrequencySeries& series,
                                    const std::vector<double>& taus) {
  auto x = phase_from_frequency(series);
  const size_t nx = x.size();
  std::vector<double> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    size_t m = tau_to_m(series, tau);
    if (nx < 2 * m + 1) throw domain_error("noise", "series too short for tau");
    double acc = 0.0;
    for (size_t i = 0; i + 2 * m < nx; ++i) {
      double d = x[i + 2 * m] - 2.0 * x[i + m] + x[i];
      acc += d * d;
    }
    size_t terms = nx - 2 * m;
    double t = m * series.tau0;
    out.push_back(std::sqrt(acc / (2.0 * t * t * static_cast<double>(terms))));
  }
  return out;
}

std::vector<double> time_deviation(const FrequencySeries& series,
                                   const std::vector<double>& taus) {
  auto x = phase_from_frequency(series);
  const size_t nx = x.size();
  std::vector<double> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    size_t m = tau_to_m(series, tau);
    if (nx < 3 * m) throw domain_error("noise", "series too short for tau");
    auto second_diff = [&](size_t i) { return x[i + 2 * m] - 2.0 * x[i + m] + x[i]; };
    double s = 0.0;
    for (size_t i = 0; i < m; ++i) s += second_diff(i);
    double acc = s * s;
    size_t terms = nx - 3 * m + 1;
    for (size_t j = 1; j < terms; ++j) {
      s += second_diff(j + m - 1) - second_diff(j - 1);
      acc += s * s;
    }
    double t = m * series.tau0;
    double mvar = acc / (2.0 * static_cast<double>(m) * static_cast<double>(m) * t * t *
                         static_cast<double>(terms));
    out.push_back(t * std::sqrt(mvar / 3.0));
  }
  return out;
}

double clock_adev_model(const ClockModel& model, double tau) {
  if (tau <= 0.0) throw domain_error("noise", "tau must be positive");
  double var = 0.0;
  var += model.white_fm * model.white_fm / tau;
  var += model.flicker_fm * model.flicker_fm;
  var += model.random_walk_fm * model.random_walk_fm * tau;
  var += 0.5 * model.drift_rate * model.drift_rate * tau * tau;
  return std::sqrt(var);
}

double link_white_fm_coefficient(const LinkNoiseModel& model) {
  if (model.tdev_points.empty()) return 0.0;
  // tdev_wfm(tau) = c * sqrt(tau / 6); least squares in log space.
  double acc = 0.0;
  for (const auto& [tau, tdev] : model.tdev_points) {
    if (tau <= 0.0 || tdev <= 0.0)
      throw domain_error("noise", "tdev budget points must be positive");
    acc += std::log(tdev) - 0.5 * std::log(tau / 6.0);
  }
  return std::exp(acc / static_cast<double>(model.tdev_points.size()));
}

double link_tdev_model(const LinkNoiseModel& model, double tau) {
  if (tau <= 0.0) throw domain_error("noise", "tau must be positive");
  double c = link_white_fm_coefficient(model);
  double var = c * c * tau / 6.0;
  if (model.turbulence > 0.0) {
    // White PM: tdev = sigma_x / sqrt(3) independent of tau.
    double sigma_x = model.turbulence / std::sqrt(3.0);
    var += sigma_x * sigma_x / 3.0;
  }
  return std::sqrt(var);
}

double link_tdev_budget(const LinkNoiseModel& model, double tau) {
  const auto& pts = model.tdev_points;
  if (pts.empty()) throw domain_error("noise", "link has no tdev budget points");
  if (tau <= 0.0) throw domain_error("noise", "tau must be positive");
  if (pts.size() == 1) return pts.front().second;
  auto interp = [](const std::pair<double, double>& a, const std::pair<double, double>& b,
                   double t) {
    double slope = std::log(b.second / a.second) / std::log(b.first / a.first);
    return a.second * std::pow(t / a.first, slope);
  };
  if (tau <= pts.front().first) return interp(pts[0], pts[1], tau);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (tau <= pts[i + 1].first) return interp(pts[i], pts[i + 1], tau);
  return interp(pts[pts.size() - 2], pts.back(), tau);
}

double bias_sigma(double bound) { return bound / std::sqrt(3.0); }

}  // namespace clocksim::noise
