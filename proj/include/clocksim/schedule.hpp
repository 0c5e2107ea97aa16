#pragma once

#include <string>
#include <vector>

#include "clocksim/dynamics.hpp"
#include "clocksim/noise.hpp"
#include "clocksim/state.hpp"

namespace clocksim::schedule {

struct Pass {
  std::string station;
  double start = 0.0;          // s
  double end = 0.0;            // s
  double max_elevation = 0.0;  // rad
};

struct CommonViewWindow {
  std::string station_a;
  std::string station_b;
  double start = 0.0;
  double end = 0.0;
};

enum class ComparisonMode { common_view, non_common_view };

// Elevation of the spacecraft above the station's local horizon (spherical
// Earth), geocentric frame.
double elevation_angle(const Trajectory& space, const dynamics::GroundStation& station,
                       double epoch);

// Intervals with elevation above the mask, scanned at a coarse step and
// refined to 1 s at the boundaries. Passes are returned sorted and
// non-overlapping per station.
std::vector<Pass> visibility_passes(const Trajectory& space,
                                    const dynamics::GroundStation& station,
                                    double mask_elevation, double t_begin, double t_end,
                                    double coarse_step = 10.0);

// Pairwise intersections of two stations' pass lists, sorted by start.
std::vector<CommonViewWindow> common_view_windows(const std::vector<Pass>& station_a,
                                                  const std::vector<Pass>& station_b);

// Time-transfer resolution of a clock comparison over an interval delta_t:
// common view uses the link's tdev budget at the window length; non-common
// view uses the dead-time instability floor 1e-13 * sqrt(delta_t), valid for
// delta_t >= 1000 s.
double comparison_uncertainty(ComparisonMode mode, double delta_t,
                              const noise::LinkNoiseModel& link);

}  // namespace clocksim::schedule
