#include "clocksim/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "clocksim/errors.hpp"

namespace clocksim::schedule {

double elevation_angle(const Trajectory& space, const dynamics::GroundStation& station,
                       double epoch) {
  StateVector sat = space.at(epoch);
  StateVector st = dynamics::ground_station_state(station, epoch);
  Vec3 up = st.position.normalized();
  Vec3 line = sat.position - st.position;
  double norm = line.norm();
  if (norm <= 0.0) throw domain_error("schedule", "spacecraft coincides with station");
  return std::asin(std::clamp(up.dot(line) / norm, -1.0, 1.0));
}

std::vector<Pass> visibility_passes(const Trajectory& space,
                                    const dynamics::GroundStation& station,
                                    double mask_elevation, double t_begin, double t_end,
                                    double coarse_step) {
  if (t_end <= t_begin) throw domain_error("schedule", "empty scan interval");
  if (coarse_step <= 1.0) throw domain_error("schedule", "coarse step must exceed 1 s");

  auto above = [&](double t) { return elevation_angle(space, station, t) >= mask_elevation; };

  // Bisect a visibility transition bracketed to within 1 s.
  auto refine = [&](double lo, double hi, bool rising) {
    while (hi - lo > 1.0) {
      double mid = 0.5 * (lo + hi);
      if (above(mid) == rising)
        hi = mid;
      else
        lo = mid;
    }
    return rising ? hi : lo;
  };

  std::vector<Pass> passes;
  bool in_pass = above(t_begin);
  double start = t_begin;
  double prev = t_begin;
  for (double t = t_begin + coarse_step;; t += coarse_step) {
    bool clipped = t >= t_end;
    if (clipped) t = t_end;
    bool now = above(t);
    if (now && !in_pass) {
      start = refine(prev, t, true);
      in_pass = true;
    } else if (!now && in_pass) {
      passes.push_back({station.label, start, refine(prev, t, false), 0.0});
      in_pass = false;
    }
    prev = t;
    if (clipped) break;
  }
  if (in_pass) passes.push_back({station.label, start, t_end, 0.0});

  for (auto& p : passes) {
    double best = -M_PI / 2.0;
    for (double t = p.start; t <= p.end; t += 1.0)
      best = std::max(best, elevation_angle(space, station, t));
    p.max_elevation = best;
  }
  return passes;
}

std::vector<CommonViewWindow> common_view_windows(const std::vector<Pass>& station_a,
                                                  const std::vector<Pass>& station_b) {
  std::vector<CommonViewWindow> windows;
  for (const auto& a : station_a) {
    for (const auto& b : station_b) {
      double lo = std::max(a.start, b.start);
      double hi = std::min(a.end, b.end);
      if (hi > lo) windows.push_back({a.station, b.station, lo, hi});
    }
  }
  std::sort(windows.begin(), windows.end(),
            [](const CommonViewWindow& x, const CommonViewWindow& y) {
              return x.start < y.start;
            });
  return windows;
}

double comparison_uncertainty(ComparisonMode mode, double delta_t,
                              const noise::LinkNoiseModel& link) {
  if (delta_t <= 0.0) throw domain_error("schedule", "interval must be positive");
  switch (mode) {
    case ComparisonMode::common_view:
      return noise::link_tdev_budget(link, delta_t);
    case ComparisonMode::non_common_view: {
      // Dead-time comparison floor, valid above 1000 s.
      if (delta_t < 1000.0)
        throw domain_error("schedule", "non-common-view budget undefined below 1000 s");
      return 1e-13 * std::sqrt(delta_t);
    }
  }
  throw domain_error("schedule", "unknown comparison mode");
}

}  // namespace clocksim::schedule
