#pragma once

#include <string>
#include <variant>
#include <vector>

#include "clocksim/state.hpp"

namespace clocksim::metric {

// Point-mass contributor to the field. A source either sits at a fixed
// position or follows an ephemeris.
struct GravitySource {
  std::string label;
  double gm = 0.0;            // m^3/s^2
  Vec3 fixed_position = Vec3::Zero();
  Ephemeris ephemeris;        // optional; overrides fixed_position when set
  double body_radius = 0.0;   // m, used for occultation tests (0 = point)

  Vec3 position_at(double epoch) const {
    return ephemeris ? ephemeris(epoch) : fixed_position;
  }
};

GravitySource fixed_source(std::string label, double gm, const Vec3& position,
                           double body_radius = 0.0);

// Field extensions beyond plain general relativity.
struct GrExtension {};

struct PpnExtension {
  double beta = 1.0;
  double gamma = 1.0;
};

// Fifth-force modification: each source potential is scaled by
// 1 + alpha * exp(-r / lambda).
struct YukawaExtension {
  double alpha = 0.0;
  double range = 1.0;  // lambda, m
};

// Constant anomalous acceleration directed toward the primary source beyond
// an onset radius.
struct AnomalyExtension {
  double magnitude = 0.0;      // m/s^2, positive = toward the primary
  double onset_radius = 0.0;   // m
};

using Extension = std::variant<GrExtension, PpnExtension, YukawaExtension, AnomalyExtension>;

struct MetricModel {
  std::vector<GravitySource> sources;
  Extension extension = GrExtension{};
};

struct MetricCoefficients {
  double g00 = 1.0;
  double grr = -1.0;
};

// Total Newtonian potential w = sum_i GM_i / r_i (>= 0), with the Yukawa
// factor applied per source when that extension is active.
double newtonian_potential(const MetricModel& model, const Vec3& position, double epoch);

// Dimensionless potential phi = -w/c^2 (<= 0 in the weak field).
double reduced_potential(const MetricModel& model, const Vec3& position, double epoch);

// Weak-field isotropic metric coefficients:
//   g00 = 1 + 2 phi + 2 beta phi^2,   grr = -1 + 2 gamma phi.
// Requires |phi| < 1e-3.
MetricCoefficients metric_coefficients(const MetricModel& model, const Vec3& position,
                                       double epoch);

// Acceleration from the anomaly extension: zero inside the onset radius,
// constant magnitude toward the primary source beyond it. Throws unless the
// model carries an AnomalyExtension.
Vec3 anomalous_acceleration(const MetricModel& model, const Vec3& position, double epoch);

// PPN parameters in effect (1,1 unless a PpnExtension is present).
PpnExtension effective_ppn(const MetricModel& model);

// Newtonian gravitational acceleration -sum_i GM_i r_i / |r_i|^3 (no
// extension contributions).
Vec3 newtonian_acceleration(const MetricModel& model, const Vec3& position, double epoch);

}  // namespace clocksim::metric
