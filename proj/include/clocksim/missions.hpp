#pragma once

#include <cstddef>
#include <vector>

#include "clocksim/dynamics.hpp"
#include "clocksim/metric.hpp"
#include "clocksim/noise.hpp"
#include "clocksim/science.hpp"
#include "clocksim/state.hpp"

namespace clocksim::missions {

// ISS clock-comparison mission: microgravity Cs clock + H-maser on the
// station, microwave link to a ground network.
struct AcesMission {
  dynamics::OrbitElements iss_orbit;
  std::vector<dynamics::GroundStation> stations;
  noise::ClockModel pharao;
  noise::ClockModel shm;
  noise::ClockModel ground_clock;
  noise::LinkNoiseModel mwl;
  double campaign_span = 0.0;       // s
  double session_duration = 0.0;    // s
  size_t drift_sessions_per_year = 12;
  double drift_session_sigma = 1e-17;
  double min_elevation = 0.174533;  // 10 degrees
  science::CampaignInjections injections;
};

AcesMission aces_baseline();

// Deep-space escape mission: trapped-ion clock, optical link, drag-free
// accelerometer package.
struct SagasMission {
  dynamics::EscapeProfile profile;
  noise::ClockModel space_clock;
  noise::ClockModel ground_clock;
  noise::AccelerometerModel accelerometer;
  noise::LinkNoiseModel link;
  double ground_session_floor = 1e-17;  // station potential/position knowledge
  double session_interval = 0.0;        // s between comparison sessions
  double session_duration = 0.0;        // s
  double nominal_span = 0.0;            // s, nominal mission end
  double k_sensitivity = 0.43;          // clock-transition alpha sensitivity
  Vec3 cmb_velocity = Vec3::Zero();     // solar-system velocity in the CMB frame
  double anomaly_magnitude = 8.7e-10;   // m/s^2 injected sunward acceleration
  double anomaly_onset = 0.0;           // m
  double anomaly_t_start = 0.0;         // s, start of the mapping arc
  double anomaly_span = 0.0;            // s
  size_t anomaly_bins = 1;
  science::KuiperBeltModel kuiper;
  double kuiper_probe_distance = 0.0;   // m, field point for the belt potential
  double kbo_gm = 6.67e11;              // m^3/s^2, flyby target
  double kbo_distance = 0.0;            // m, approach distance
  double conjunction_cadence = 1000.0;  // s
  double conjunction_half_span = 0.0;   // s around the conjunction epoch
  double conjunction_epoch_hint = 0.0;  // s, mission time to search around
  double conjunction_gamma = 1.0;       // injected value
  double gw_f_low = 6e-5;               // Hz
  double gw_f_high = 1e-3;              // Hz
  double gw_template_duration = 0.0;    // s
  science::CampaignInjections injections;
};

SagasMission sagas_baseline();

// Cached mission geometry: solved escape, a circular heliocentric Earth
// orbit phased so opposition occurs at the conjunction epoch, and the sun
// metric used for potentials and Shapiro delays.
struct SagasGeometry {
  dynamics::EscapeSolution escape;
  Trajectory earth;
  metric::MetricModel sun;
  double conjunction_epoch = 0.0;
};

SagasGeometry sagas_geometry(const SagasMission& mission);

metric::MetricModel aces_metric();

// Clock-comparison campaigns: session-averaged regressors and noise levels
// ready for the science-module fits.
science::ComparisonCampaign sagas_campaign(const SagasMission& mission,
                                           const SagasGeometry& geometry);
science::ComparisonCampaign aces_campaign(const AcesMission& mission);

// Ground-network constants-drift campaign.
science::DriftCampaign drift_campaign(const AcesMission& mission, double span_years);

science::ConjunctionDesign conjunction_design(const SagasMission& mission,
                                              const SagasGeometry& geometry);

// Windowed anomalous-acceleration design over [t_start, t_start + span].
// Bin edges are radii (m); if empty, n_bins equal-width bins span the arc.
science::AnomalyDesign anomaly_design(const SagasMission& mission,
                                      const SagasGeometry& geometry, double magnitude,
                                      double onset_radius, double t_start, double span,
                                      size_t n_bins,
                                      std::vector<double> bin_edges = {});

// Per-session one-sigma of a space-vs-ground comparison averaged over tau.
double session_sigma(const noise::ClockModel& space, const noise::ClockModel& ground,
                     const noise::LinkNoiseModel& link, double extra_white_floor,
                     double tau);

}  // namespace clocksim::missions
