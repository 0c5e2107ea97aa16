#pragma once

#include "clocksim/metric.hpp"
#include "clocksim/noise.hpp"
#include "clocksim/state.hpp"

namespace clocksim::observables {

// Fractional frequency offset of a target clock relative to a reference
// clock: total = (w_ref - w_target)/c^2 + (v_ref^2 - v_target^2)/(2 c^2).
// A deeper (larger w) or faster target clock runs slow (negative shift).
struct FrequencyShift {
  double gravitational = 0.0;
  double velocity = 0.0;
  double total = 0.0;
};

FrequencyShift fractional_frequency_shift(const metric::MetricModel& model,
                                          const StateVector& reference,
                                          const StateVector& target);

// Proper time accumulated by a clock along a trajectory between coordinate
// epochs, from the weak-field metric line element. Cancellation-free: the
// integrand's deviation from 1 is integrated adaptively.
double proper_time_elapsed(const metric::MetricModel& model, const Trajectory& clock,
                           double t0, double t1);

// One-way gravitational light-time delay along the straight path between two
// positions. Throws occultation_error if the path crosses a source body.
double shapiro_delay(const metric::MetricModel& model, const Vec3& emitter,
                     const Vec3& receiver, double epoch);

struct LightTimeResult {
  double emission_epoch = 0.0;
  double reception_epoch = 0.0;
  double total = 0.0;      // s, geometric + shapiro
  double geometric = 0.0;  // s
  double shapiro = 0.0;    // s
  int iterations = 0;
};

// Solve for the emission epoch given the reception epoch (or vice versa) by
// fixed-point iteration on the total delay; tolerance 1e-12 s within 20
// iterations.
LightTimeResult light_time(const metric::MetricModel& model, const Trajectory& emitter,
                           const Trajectory& receiver, double reception_epoch);

LightTimeResult light_time_forward(const metric::MetricModel& model,
                                   const Trajectory& emitter, const Trajectory& receiver,
                                   double emission_epoch);

enum class Combination {
  one_way,            // space-to-ground downlink, epoch = ground reception
  two_way_satellite,  // up + down coincident at the satellite, epoch = turnaround
  two_way_ground,     // up + down coincident at the ground station, epoch = coincidence
  common_view         // downlink difference to two stations, epoch = emission
};

struct LinkGeometry {
  const Trajectory* space = nullptr;
  const Trajectory* ground = nullptr;
  const Trajectory* ground_b = nullptr;  // second station, common view only
  const metric::MetricModel* model = nullptr;
};

struct LinkNoiseSeries {
  const noise::FrequencySeries* space = nullptr;
  const noise::FrequencySeries* ground = nullptr;
  const noise::FrequencySeries* ground_b = nullptr;
};

// Simulated fractional-frequency Doppler observable. Two-way combinations sum
// the legs so the designated clock's noise sample cancels exactly; common
// view differences two downlinks sharing the emission sample.
double doppler_observable(const LinkGeometry& link, Combination combination, double epoch,
                          const LinkNoiseSeries& noise_series = {});

}  // namespace clocksim::observables
