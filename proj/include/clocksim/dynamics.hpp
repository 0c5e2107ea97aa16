#pragma once

#include <string>

#include "clocksim/metric.hpp"
#include "clocksim/state.hpp"

namespace clocksim::dynamics {

// Classical orbital elements referenced to a fixed epoch.
struct OrbitElements {
  double gm = 0.0;             // m^3/s^2 of the central body
  double semi_major_axis = 0;  // m
  double eccentricity = 0.0;
  double inclination = 0.0;    // rad
  double raan = 0.0;           // rad
  double arg_periapsis = 0.0;  // rad
  double mean_anomaly = 0.0;   // rad at `epoch`
  double epoch = 0.0;          // s
};

// Two-body state at an epoch. Throws domain_error for non-elliptic input.
StateVector kepler_state(const OrbitElements& elements, double epoch);

Trajectory kepler_trajectory(std::string label, const OrbitElements& elements,
                             double t_begin, double t_end);

double orbital_period(const OrbitElements& elements);

struct GroundStation {
  std::string label;
  double latitude = 0.0;    // rad, geocentric
  double longitude = 0.0;   // rad, at epoch 0
  double radius = 6.378137e6;  // m from geocenter
};

// Station state in the geocentric inertial frame under uniform Earth rotation
// about +z. Radius must lie in [6.3e6, 6.5e6] m.
StateVector ground_station_state(const GroundStation& station, double epoch);

Trajectory ground_station_trajectory(const GroundStation& station, double t_begin,
                                     double t_end);

// Station state in a heliocentric frame: Earth's center on a circular 1 AU
// orbit in the x-y plane (phase `orbit_phase0` at epoch 0) plus the rotating
// geocentric offset. Obliquity is ignored.
Trajectory heliocentric_station_trajectory(const GroundStation& station,
                                           double orbit_phase0, double t_begin,
                                           double t_end);

// Circular ephemeris about the origin in a plane inclined to x-y about the
// x axis.
Ephemeris circular_ephemeris(double radius, double angular_rate, double phase0,
                             double inclination = 0.0);

// Deep-space escape profile: transfer ellipse from the departure radius to the
// flyby radius, a co-orbital coast arc, then a radial hyperbolic leg. Coast
// duration and hyperbolic excess speed are solved so the two range waypoints
// are met exactly.
struct EscapeProfile {
  double gm = 1.32712440018e20;
  double depart_radius = 1.495978707e11;        // m
  double flyby_radius = 5.2 * 1.495978707e11;   // m
  double waypoint_mid_epoch = 15 * 3.15576e7;   // s
  double waypoint_mid_radius = 39 * 1.495978707e11;
  double waypoint_end_epoch = 20 * 3.15576e7;   // also the span end
  double waypoint_end_radius = 53 * 1.495978707e11;
  double escape_latitude = 9.3e-3;              // rad above the x-y plane
};

struct EscapeSolution {
  Trajectory trajectory;
  double transfer_duration = 0.0;  // s, departure to flyby arrival
  double coast_duration = 0.0;     // s
  double v_infinity = 0.0;         // m/s of the radial leg
  Vec3 escape_direction;           // unit vector of the radial leg
  double plane_inclination = 0.0;  // rad, solved from escape_latitude
};

EscapeSolution solve_escape(const EscapeProfile& profile);

// Convenience wrapper returning just the trajectory; span is [0, waypoint_end_epoch].
Trajectory escape_trajectory(const EscapeProfile& profile);

// Fixed-step RK4 propagation under the model's Newtonian field, its anomalous
// acceleration (when present), and a constant accelerometer-style bias along
// the sunward line (positive toward the primary source). A companion
// integration without the perturbations self-checks two-body energy drift and
// throws accuracy_error above 1e-6 relative per orbit (per year if unbound).
Trajectory propagate_perturbed(const StateVector& initial,
                               const metric::MetricModel& model,
                               double sunward_bias, double step, double t_end,
                               std::string label = "perturbed");

}  // namespace clocksim::dynamics
