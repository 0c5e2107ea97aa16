#include "clocksim/missions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/observables.hpp"

namespace clocksim::missions {

namespace {

constexpr double pi = 3.14159265358979323846;

double deg(double d) { return d * pi / 180.0; }

// Distance of the origin from the segment between two points.
double segment_offset_from_origin(const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double len2 = d.squaredNorm();
  double s = len2 > 0.0 ? -a.dot(d) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return (a + s * d).norm();
}

}  // namespace

AcesMission aces_baseline() {
  AcesMission m;
  m.iss_orbit.gm = constants::gm_earth;
  m.iss_orbit.semi_major_axis = 6.778e6;
  m.iss_orbit.eccentricity = 0.0;
  m.iss_orbit.inclination = deg(51.6);

  m.stations = {
      {"paris", deg(48.85), deg(2.35)},
      {"braunschweig", deg(52.28), deg(10.53)},
      {"boulder", deg(40.01), deg(-105.27)},
      {"tokyo", deg(35.69), deg(139.69)},
      {"sydney", deg(-33.87), deg(151.21)},
  };

  m.pharao = {"pharao", 1e-13, 0.0, 0.0, 0.0, 1e-16};
  m.shm = {"shm", 1.4e-13, 7e-16, 0.0, 0.0, 0.0};
  m.ground_clock = {"ground", 1e-14, 0.0, 0.0, 0.0, 1e-16};
  m.mwl.label = "mwl";
  m.mwl.tdev_points = {{300.0, 0.3e-12}, {86400.0, 7e-12}, {864000.0, 23e-12}};
  m.mwl.turbulence = 0.0;

  m.campaign_span = 180.0 * constants::day;
  m.session_duration = constants::day;
  return m;
}

SagasMission sagas_baseline() {
  SagasMission m;
  m.profile = dynamics::EscapeProfile{};

  m.space_clock = {"sagas_ion", 1e-14, 0.0, 0.0, 0.0, 1e-17};
  m.ground_clock = {"ground_optical", 4e-15, 0.0, 0.0, 0.0, 1e-17};
  m.accelerometer = {"sagas_accel", 1.3e-9, 5e-12};
  m.link.label = "optical_link";
  m.link.turbulence = 3e-13;

  m.session_interval = 10.0 * constants::day;
  m.session_duration = constants::day;
  m.nominal_span = m.profile.waypoint_mid_epoch;

  m.cmb_velocity = constants::v_sun_cmb * Vec3::UnitX();

  m.anomaly_onset = 15.0 * constants::au;
  m.anomaly_t_start = 8.0 * constants::year;
  m.anomaly_span = constants::year;
  m.anomaly_bins = 1;

  m.kuiper.gm = 0.1 * constants::gm_earth_mass_unit;
  m.kuiper.inner_radius = 30.0 * constants::au;
  m.kuiper.outer_radius = 100.0 * constants::au;
  m.kuiper.distribution = science::BeltDistribution::annulus;
  m.kuiper.plane_inclination = deg(2.0);
  m.kuiper_probe_distance = 40.0 * constants::au;
  m.kbo_distance = 0.2 * constants::au;

  m.conjunction_half_span = 20.0 * constants::day;
  m.conjunction_epoch_hint = 8.0 * constants::year;
  m.gw_template_duration = constants::year;
  return m;
}

metric::MetricModel aces_metric() {
  metric::MetricModel model;
  model.sources.push_back(
      metric::fixed_source("earth", constants::gm_earth, Vec3::Zero(), constants::r_earth));
  return model;
}

SagasGeometry sagas_geometry(const SagasMission& mission) {
  SagasGeometry g;
  g.escape = dynamics::solve_escape(mission.profile);
  g.sun.sources.push_back(
      metric::fixed_source("sun", mission.profile.gm, Vec3::Zero(), constants::r_sun));

  // During the radial leg the probe's direction is fixed, so opposition (and
  // the minimum impact parameter) lands exactly when the Earth reaches the
  // antipodal azimuth. Phase the Earth so that happens at the hint epoch.
  g.conjunction_epoch = mission.conjunction_epoch_hint;
  const Vec3 probe = g.escape.trajectory.at(g.conjunction_epoch).position;
  const double probe_azimuth = std::atan2(probe.y(), probe.x());
  const double n_earth =
      std::sqrt(mission.profile.gm / std::pow(constants::au, 3));

  dynamics::OrbitElements earth;
  earth.gm = mission.profile.gm;
  earth.semi_major_axis = constants::au;
  earth.mean_anomaly = probe_azimuth + pi - n_earth * g.conjunction_epoch;
  g.earth = dynamics::kepler_trajectory("earth", earth, 0.0,
                                        mission.profile.waypoint_end_epoch);
  return g;
}

double session_sigma(const noise::ClockModel& space, const noise::ClockModel& ground,
                     const noise::LinkNoiseModel& link, double extra_white_floor,
                     double tau) {
  if (!(tau > 0.0)) {
    throw domain_error("missions", "session duration must be positive");
  }
  const double space_part = noise::clock_adev_model(space, tau);
  const double ground_part = noise::clock_adev_model(ground, tau);
  const double link_part = std::sqrt(3.0) * noise::link_tdev_model(link, tau) / tau;
  return std::sqrt(space_part * space_part + ground_part * ground_part +
                   link_part * link_part + extra_white_floor * extra_white_floor);
}

science::ComparisonCampaign sagas_campaign(const SagasMission& mission,
                                           const SagasGeometry& geometry) {
  if (!(mission.session_interval > 0.0) || !(mission.nominal_span > 0.0)) {
    throw domain_error("missions", "campaign cadence and span must be positive");
  }
  science::ComparisonCampaign c;
  c.k_sensitivity = mission.k_sensitivity;
  c.bias_space_bound = mission.space_clock.accuracy;
  c.bias_ground_bound = mission.ground_clock.accuracy;
  const double sigma = session_sigma(mission.space_clock, mission.ground_clock,
                                     mission.link, mission.ground_session_floor,
                                     mission.session_duration);

  for (size_t i = 0;; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * mission.session_interval;
    if (t >= mission.nominal_span) break;
    const StateVector probe = geometry.escape.trajectory.at(t);
    const StateVector earth = geometry.earth.at(t);
    // The ground clock's geopotential and rotation terms are calibrated
    // against known Earth parameters; the comparison is sensitive to the
    // heliocentric terms.
    const double w_ground = metric::newtonian_potential(geometry.sun, earth.position, t);
    const double w_space = metric::newtonian_potential(geometry.sun, probe.position, t);
    c.epochs.push_back(t);
    c.grav.push_back((w_ground - w_space) / constants::c2);
    c.vel.push_back((earth.velocity.squaredNorm() - probe.velocity.squaredNorm()) /
                    (2.0 * constants::c2));
    c.cmb.push_back((probe.velocity - earth.velocity).dot(mission.cmb_velocity) /
                    constants::c2);
    c.sigma.push_back(sigma);
  }
  return c;
}

science::ComparisonCampaign aces_campaign(const AcesMission& mission) {
  if (!(mission.campaign_span > 0.0) || !(mission.session_duration > 0.0)) {
    throw domain_error("missions", "campaign span and session duration must be positive");
  }
  if (mission.stations.empty()) {
    throw domain_error("missions", "no ground stations");
  }
  const metric::MetricModel model = aces_metric();
  const double period = dynamics::orbital_period(mission.iss_orbit);
  const Trajectory iss =
      dynamics::kepler_trajectory("iss", mission.iss_orbit, 0.0, mission.campaign_span);
  const Trajectory ground = dynamics::ground_station_trajectory(
      mission.stations.front(), 0.0, mission.campaign_span);

  science::ComparisonCampaign c;
  c.k_sensitivity = 0.43;
  c.bias_space_bound = mission.pharao.accuracy;
  c.bias_ground_bound = mission.ground_clock.accuracy;
  const double sigma = session_sigma(mission.pharao, mission.ground_clock, mission.mwl,
                                     0.0, mission.session_duration);

  const size_t n_sessions =
      static_cast<size_t>(mission.campaign_span / mission.session_duration);
  for (size_t i = 0; i < n_sessions; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * mission.session_duration;
    // Circular orbit: average the shift over one revolution.
    double grav = 0.0;
    double vel = 0.0;
    const int samples = 16;
    for (int k = 0; k < samples; ++k) {
      const double tk = t + (k - samples / 2) * period / samples;
      const auto shift =
          observables::fractional_frequency_shift(model, ground.at(tk), iss.at(tk));
      grav += shift.gravitational;
      vel += shift.velocity;
    }
    c.epochs.push_back(t);
    c.grav.push_back(grav / samples);
    c.vel.push_back(vel / samples);
    c.sigma.push_back(sigma);
  }
  return c;
}

science::DriftCampaign drift_campaign(const AcesMission& mission, double span_years) {
  if (!(span_years > 0.0)) {
    throw domain_error("missions", "drift span must be positive");
  }
  science::DriftCampaign c;
  const size_t n = static_cast<size_t>(
      std::llround(span_years * static_cast<double>(mission.drift_sessions_per_year)));
  if (n < 3) {
    throw domain_error("missions", "drift span too short for a slope fit");
  }
  const double step = constants::year / static_cast<double>(mission.drift_sessions_per_year);
  for (size_t i = 0; i < n; ++i) {
    c.epochs.push_back((static_cast<double>(i) + 0.5) * step);
    c.sigma.push_back(mission.drift_session_sigma);
  }
  return c;
}

science::ConjunctionDesign conjunction_design(const SagasMission& mission,
                                              const SagasGeometry& geometry) {
  if (!(mission.conjunction_cadence > 0.0) || !(mission.conjunction_half_span > 0.0)) {
    throw domain_error("missions", "conjunction cadence and span must be positive");
  }
  const double t_conj = geometry.conjunction_epoch;
  const auto k_max =
      static_cast<long>(mission.conjunction_half_span / mission.conjunction_cadence);

  // One-way delay with both endpoints at the same epoch; the up and down legs
  // of the satellite-coincident two-way combination each contribute one.
  auto one_way = [&](double t) {
    return observables::shapiro_delay(geometry.sun, geometry.earth.at(t).position,
                                      geometry.escape.trajectory.at(t).position, t);
  };

  science::ConjunctionDesign d;
  d.accel_bias_bound = mission.accelerometer.bias_uncertainty;
  d.injected_gamma = mission.conjunction_gamma;
  const double turb_adev = mission.link.turbulence / mission.conjunction_cadence;
  const double accel_y =
      mission.accelerometer.white_noise * std::sqrt(mission.conjunction_cadence) /
      constants::c;
  const double sigma_pt = std::sqrt(
      std::pow(noise::clock_adev_model(mission.ground_clock, mission.conjunction_cadence), 2) +
      turb_adev * turb_adev + accel_y * accel_y);

  const double h = 0.5 * mission.conjunction_cadence;
  double min_offset = std::numeric_limits<double>::infinity();
  for (long k = -k_max; k <= k_max; ++k) {
    const double t = t_conj + static_cast<double>(k) * mission.conjunction_cadence;
    // Rate per unit (1+gamma): the (1+gamma) inside shapiro_delay divides out.
    const double gamma_scale = 1.0 + metric::effective_ppn(geometry.sun).gamma;
    const double rate = 2.0 * (one_way(t + h) - one_way(t - h)) / (2.0 * h) / gamma_scale;
    d.epochs.push_back(t);
    d.shapiro_rate.push_back(rate);
    d.sigma.push_back(sigma_pt);
    min_offset = std::min(min_offset,
                          segment_offset_from_origin(
                              geometry.earth.at(t).position,
                              geometry.escape.trajectory.at(t).position));
  }
  if (min_offset > 5.0 * constants::r_sun) {
    throw domain_error("missions", "ray never approaches within 5 solar radii");
  }
  return d;
}

science::AnomalyDesign anomaly_design(const SagasMission& mission,
                                      const SagasGeometry& geometry, double magnitude,
                                      double onset_radius, double t_start, double span,
                                      size_t n_bins, std::vector<double> bin_edges) {
  if (!(span > 0.0) || n_bins == 0) {
    throw domain_error("missions", "anomaly span and bin count must be positive");
  }
  const double tau_w = constants::day;
  const auto n_windows = static_cast<size_t>(span / tau_w);
  if (n_windows == 0) {
    throw domain_error("missions", "anomaly span shorter than one window");
  }
  const Trajectory& traj = geometry.escape.trajectory;

  science::AnomalyDesign d;
  d.n_bins = n_bins;
  d.window_duration = tau_w;
  d.accel_white = mission.accelerometer.white_noise;
  d.accel_bias_bound = mission.accelerometer.bias_uncertainty;
  const double clock_term =
      std::sqrt(2.0) * constants::c *
      noise::clock_adev_model(mission.ground_clock, tau_w) / tau_w;
  const double turb_term =
      std::sqrt(2.0) * constants::c * (mission.link.turbulence / tau_w) / tau_w;
  d.clock_sigma_window = std::hypot(clock_term, turb_term);

  std::vector<double> radii(n_windows);
  for (size_t k = 0; k < n_windows; ++k) {
    const double t0 = t_start + static_cast<double>(k) * tau_w;
    const double t1 = t0 + tau_w;
    radii[k] = traj.at(0.5 * (t0 + t1)).position.norm();

    // Window-mean anomalous acceleration; the radius is monotone on these
    // arcs, so a crossing splits the window once.
    const double r0 = traj.at(t0).position.norm();
    const double r1 = traj.at(t1).position.norm();
    double fraction = 0.0;
    if (r0 >= onset_radius && r1 >= onset_radius) {
      fraction = 1.0;
    } else if (r0 < onset_radius && r1 < onset_radius) {
      fraction = 0.0;
    } else {
      double lo = t0;
      double hi = t1;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((traj.at(mid).position.norm() >= onset_radius) == (r1 >= onset_radius)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const double t_cross = 0.5 * (lo + hi);
      fraction = r1 >= onset_radius ? (t1 - t_cross) / tau_w : (t_cross - t0) / tau_w;
    }
    d.window_truth.push_back(magnitude * fraction);
  }

  if (bin_edges.empty()) {
    const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
    const double width = (*hi - *lo) / static_cast<double>(n_bins);
    bin_edges.resize(n_bins + 1);
    for (size_t b = 0; b <= n_bins; ++b) {
      bin_edges[b] = *lo + width * static_cast<double>(b);
    }
  } else if (bin_edges.size() != n_bins + 1) {
    throw domain_error("missions", "bin edge list must have n_bins + 1 entries");
  }

  d.bin_radius.resize(n_bins);
  for (size_t b = 0; b < n_bins; ++b) {
    d.bin_radius[b] = 0.5 * (bin_edges[b] + bin_edges[b + 1]);
  }
  for (size_t k = 0; k < n_windows; ++k) {
    auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), radii[k]);
    long b = std::distance(bin_edges.begin(), it) - 1;
    b = std::clamp(b, 0L, static_cast<long>(n_bins) - 1);
    d.window_bin.push_back(static_cast<int>(b));
  }
  return d;
}

}  // namespace clocksim::missions
