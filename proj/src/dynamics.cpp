#include "clocksim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim::dynamics {

namespace {

double solve_kepler_equation(double mean_anomaly, double e) {
  double m = std::remainder(mean_anomaly, 2.0 * M_PI);
  double ecc_anomaly = e < 0.8 ? m : M_PI;
  for (int i = 0; i < 60; ++i) {
    double f = ecc_anomaly - e * std::sin(ecc_anomaly) - m;
    double fp = 1.0 - e * std::cos(ecc_anomaly);
    double delta = f / fp;
    ecc_anomaly -= delta;
    if (std::abs(delta) < 1e-14) return ecc_anomaly;
  }
  throw numeric_error("dynamics", "Kepler equation failed to converge");
}

struct Node {
  double t;
  Vec3 x;
  Vec3 v;
};

// Cubic Hermite interpolation over stored nodes; C1 in position.
class HermiteTable {
 public:
  explicit HermiteTable(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  StateVector sample(double t) const {
    const auto& n = nodes_;
    auto it = std::upper_bound(n.begin(), n.end(), t,
                               [](double val, const Node& node) { return val < node.t; });
    size_t hi = std::min<size_t>(std::max<ptrdiff_t>(it - n.begin(), 1), n.size() - 1);
    size_t lo = hi - 1;
    double h = n[hi].t - n[lo].t;
    double s = (t - n[lo].t) / h;
    double s2 = s * s, s3 = s2 * s;
    double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    double d00 = (6 * s2 - 6 * s) / h, d10 = (3 * s2 - 4 * s + 1) / h;
    double d01 = (-6 * s2 + 6 * s) / h, d11 = (3 * s2 - 2 * s) / h;
    StateVector out;
    out.epoch = t;
    out.position = h00 * n[lo].x + (h10 * h) * n[lo].v + h01 * n[hi].x + (h11 * h) * n[hi].v;
    out.velocity = (d00 * h) * n[lo].x + (d10 * h) * n[lo].v + (d01 * h) * n[hi].x +
                   (d11 * h) * n[hi].v;
    return out;
  }

 private:
  std::vector<Node> nodes_;
};

}  // namespace

StateVector kepler_state(const OrbitElements& el, double epoch) {
  if (el.gm <= 0.0) throw domain_error("dynamics", "gm must be positive");
  if (el.eccentricity < 0.0 || el.eccentricity >= 1.0)
    throw domain_error("dynamics", "eccentricity outside [0,1): bound orbit expected");
  if (el.semi_major_axis <= 0.0)
    throw domain_error("dynamics", "semi-major axis must be positive for a bound orbit");

  double a = el.semi_major_axis, e = el.eccentricity;
  double n = std::sqrt(el.gm / (a * a * a));
  double m = el.mean_anomaly + n * (epoch - el.epoch);
  double big_e = solve_kepler_equation(m, e);
  double cos_e = std::cos(big_e), sin_e = std::sin(big_e);
  double r = a * (1.0 - e * cos_e);
  double sq = std::sqrt(1.0 - e * e);

  // Perifocal coordinates.
  Vec3 pos_pf(a * (cos_e - e), a * sq * sin_e, 0.0);
  double rdot_factor = n * a * a / r;
  Vec3 vel_pf(-rdot_factor * sin_e, rdot_factor * sq * cos_e, 0.0);

  double co = std::cos(el.raan), so = std::sin(el.raan);
  double ci = std::cos(el.inclination), si = std::sin(el.inclination);
  double cw = std::cos(el.arg_periapsis), sw = std::sin(el.arg_periapsis);
  Eigen::Matrix3d rot;
  rot << co * cw - so * sw * ci, -co * sw - so * cw * ci, so * si,
         so * cw + co * sw * ci, -so * sw + co * cw * ci, -co * si,
         sw * si,                 cw * si,                 ci;

  StateVector out;
  out.epoch = epoch;
  out.position = rot * pos_pf;
  out.velocity = rot * vel_pf;
  return out;
}

Trajectory kepler_trajectory(std::string label, const OrbitElements& elements,
                             double t_begin, double t_end) {
  kepler_state(elements, t_begin);  // validate elements up front
  return Trajectory(std::move(label), t_begin, t_end,
                    [elements](double t) { return kepler_state(elements, t); });
}

double orbital_period(const OrbitElements& el) {
  if (el.semi_major_axis <= 0.0 || el.gm <= 0.0)
    throw domain_error("dynamics", "period undefined for non-elliptic elements");
  double a = el.semi_major_axis;
  return 2.0 * M_PI * std::sqrt(a * a * a / el.gm);
}

StateVector ground_station_state(const GroundStation& st, double epoch) {
  if (st.radius < 6.3e6 || st.radius > 6.5e6)
    throw domain_error("dynamics", "station radius outside Earth-surface band");
  double lon = st.longitude + constants::earth_rotation_rate * epoch;
  double cl = std::cos(st.latitude);
  StateVector out;
  out.epoch = epoch;
  out.position = st.radius * Vec3(cl * std::cos(lon), cl * std::sin(lon), std::sin(st.latitude));
  out.velocity = constants::earth_rotation_rate * Vec3(-out.position.y(), out.position.x(), 0.0);
  return out;
}

Trajectory ground_station_trajectory(const GroundStation& station, double t_begin,
                                     double t_end) {
  ground_station_state(station, t_begin);
  return Trajectory(station.label, t_begin, t_end,
                    [station](double t) { return ground_station_state(station, t); });
}

Trajectory heliocentric_station_trajectory(const GroundStation& station,
                                           double orbit_phase0, double t_begin,
                                           double t_end) {
  ground_station_state(station, t_begin);
  double rate = std::sqrt(constants::gm_sun / std::pow(constants::au, 3));
  return Trajectory(station.label, t_begin, t_end, [station, orbit_phase0, rate](double t) {
    double ang = orbit_phase0 + rate * t;
    StateVector earth;
    earth.position = constants::au * Vec3(std::cos(ang), std::sin(ang), 0.0);
    earth.velocity = constants::au * rate * Vec3(-std::sin(ang), std::cos(ang), 0.0);
    StateVector local = ground_station_state(station, t);
    StateVector out;
    out.epoch = t;
    out.position = earth.position + local.position;
    out.velocity = earth.velocity + local.velocity;
    return out;
  });
}

Ephemeris circular_ephemeris(double radius, double angular_rate, double phase0,
                             double inclination) {
  double ci = std::cos(inclination), si = std::sin(inclination);
  return [=](double t) {
    double ang = phase0 + angular_rate * t;
    Vec3 in_plane(radius * std::cos(ang), radius * std::sin(ang), 0.0);
    return Vec3(in_plane.x(), ci * in_plane.y(), si * in_plane.y());
  };
}

namespace {

// Flight time of a radial hyperbolic leg between two radii.
double radial_time_of_flight(double gm, double v_inf, double r_from, double r_to) {
  auto inv_speed = [&](double r) { return 1.0 / std::sqrt(v_inf * v_inf + 2.0 * gm / r); };
  const int n = 4096;  // composite Simpson, even count
  double h = (r_to - r_from) / n;
  double acc = inv_speed(r_from) + inv_speed(r_to);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * inv_speed(r_from + i * h);
  return acc * h / 3.0;
}

// Dense radius/speed grid of the radial leg from r_from over a duration.
std::vector<Node> radial_leg_grid(double gm, double v_inf, double r_from, double t_begin,
                                  double duration, double step) {
  auto speed = [&](double r) { return std::sqrt(v_inf * v_inf + 2.0 * gm / r); };
  std::vector<Node> grid;
  int n = static_cast<int>(std::ceil(duration / step)) + 1;
  grid.reserve(n + 1);
  double r = r_from;
  double t = t_begin;
  grid.push_back({t, Vec3(r, 0, 0), Vec3(speed(r), 0, 0)});
  double remaining = duration;
  while (remaining > 0.0) {
    double h = std::min(step, remaining);
    double k1 = speed(r);
    double k2 = speed(r + 0.5 * h * k1);
    double k3 = speed(r + 0.5 * h * k2);
    double k4 = speed(r + h * k3);
    r += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    t += h;
    remaining -= h;
    grid.push_back({t, Vec3(r, 0, 0), Vec3(speed(r), 0, 0)});
  }
  return grid;
}

}  // namespace

EscapeSolution solve_escape(const EscapeProfile& p) {
  if (p.flyby_radius <= p.depart_radius)
    throw domain_error("dynamics", "flyby radius must exceed departure radius");
  if (p.waypoint_end_epoch <= p.waypoint_mid_epoch)
    throw domain_error("dynamics", "waypoint epochs out of order");

  double a_t = 0.5 * (p.depart_radius + p.flyby_radius);
  double e_t = (p.flyby_radius - p.depart_radius) / (p.flyby_radius + p.depart_radius);
  double transfer = M_PI * std::sqrt(a_t * a_t * a_t / p.gm);
  if (transfer >= p.waypoint_mid_epoch)
    throw domain_error("dynamics", "transfer ellipse alone exceeds the mid waypoint epoch");

  const double v_inf_lo = 100.0, v_inf_hi = 1.0e5;  // m/s bracket for the leg solve

  // Longest coast that still lets the fastest bracketed leg reach the mid
  // waypoint on time (5% margin keeps the inner bracket strict).
  double fastest_leg =
      radial_time_of_flight(p.gm, v_inf_hi, p.flyby_radius, p.waypoint_mid_radius);
  double coast_max = p.waypoint_mid_epoch - transfer - 1.05 * fastest_leg;
  if (coast_max <= 0.0)
    throw domain_error("dynamics",
                       "mid waypoint needs a leg faster than the 100 km/s solve bracket");

  // Inner solve: v_infinity so the radial leg reaches the mid waypoint on time.
  auto solve_v_inf = [&](double coast) {
    double tof_needed = p.waypoint_mid_epoch - transfer - coast;
    double lo = v_inf_lo, hi = v_inf_hi;
    auto tof = [&](double v) {
      return radial_time_of_flight(p.gm, v, p.flyby_radius, p.waypoint_mid_radius);
    };
    if (tof(lo) < tof_needed || tof(hi) > tof_needed)
      throw numeric_error("dynamics", "escape v_infinity not bracketed");
    for (int i = 0; i < 80; ++i) {
      double midv = 0.5 * (lo + hi);
      (tof(midv) > tof_needed ? lo : hi) = midv;
    }
    return 0.5 * (lo + hi);
  };

  // Radius reached at the end waypoint epoch for a given coast duration.
  auto end_radius = [&](double coast, double* v_out = nullptr) {
    double v_inf = solve_v_inf(coast);
    if (v_out) *v_out = v_inf;
    double leg_duration = p.waypoint_end_epoch - transfer - coast;
    auto grid = radial_leg_grid(p.gm, v_inf, p.flyby_radius, 0.0, leg_duration, constants::day);
    return grid.back().x.x();
  };

  double lo = 0.0, hi = coast_max;
  double f_lo = end_radius(lo) - p.waypoint_end_radius;
  double f_hi = end_radius(hi) - p.waypoint_end_radius;
  double coast;
  if (f_lo >= 0.0) {
    coast = 0.0;  // already at/over the end waypoint with no coast; accept closest
  } else if (f_hi <= 0.0) {
    throw numeric_error("dynamics", "end waypoint unreachable within coast bounds");
  } else {
    for (int i = 0; i < 60; ++i) {
      double mid = 0.5 * (lo + hi);
      ((end_radius(mid) - p.waypoint_end_radius) < 0.0 ? lo : hi) = mid;
    }
    coast = 0.5 * (lo + hi);
  }

  double v_inf;
  end_radius(coast, &v_inf);

  // Plane geometry: in-plane angle theta measured from e1; departure at
  // theta = -pi/2, flyby arrival at +pi/2, coast advances at the circular rate.
  double n_fly = std::sqrt(p.gm / std::pow(p.flyby_radius, 3));
  double theta_esc = 0.5 * M_PI + n_fly * coast;
  double sin_lat = std::sin(p.escape_latitude);
  if (std::abs(std::sin(theta_esc)) < std::abs(sin_lat))
    throw domain_error("dynamics", "requested escape latitude unreachable from coast geometry");
  double incl = std::asin(sin_lat / std::sin(theta_esc));

  Vec3 e1(1.0, 0.0, 0.0);
  Vec3 e2(0.0, std::cos(incl), std::sin(incl));
  auto plane_pos = [e1, e2](double r, double th) {
    return r * (std::cos(th) * e1 + std::sin(th) * e2);
  };
  auto plane_tangent = [e1, e2](double th) { return -std::sin(th) * e1 + std::cos(th) * e2; };
  auto plane_radial = [e1, e2](double th) { return std::cos(th) * e1 + std::sin(th) * e2; };

  double leg_duration = p.waypoint_end_epoch - transfer - coast;
  auto leg = std::make_shared<std::vector<Node>>(
      radial_leg_grid(p.gm, v_inf, p.flyby_radius, 0.0, leg_duration, 0.5 * constants::day));
  auto leg_table = std::make_shared<HermiteTable>(*leg);

  double gm = p.gm;
  double slr = a_t * (1.0 - e_t * e_t);
  double vis_factor = std::sqrt(gm / slr);
  double n_t = std::sqrt(gm / (a_t * a_t * a_t));
  double t_coast_end = transfer + coast;
  Vec3 u_esc = plane_radial(theta_esc);
  double end_epoch = p.waypoint_end_epoch;

  auto sampler = [=](double t) {
    StateVector out;
    out.epoch = t;
    if (t <= transfer) {
      // Transfer ellipse, perihelion at departure.
      double big_e = solve_kepler_equation(n_t * t, e_t);
      double r = a_t * (1.0 - e_t * std::cos(big_e));
      double nu = std::atan2(std::sqrt(1.0 - e_t * e_t) * std::sin(big_e),
                             std::cos(big_e) - e_t);
      double th = nu - 0.5 * M_PI;
      double v_r = vis_factor * e_t * std::sin(nu);
      double v_t = vis_factor * (1.0 + e_t * std::cos(nu));
      out.position = plane_pos(r, th);
      out.velocity = v_r * plane_radial(th) + v_t * plane_tangent(th);
    } else if (t <= t_coast_end) {
      double th = 0.5 * M_PI + n_fly * (t - transfer);
      out.position = plane_pos(p.flyby_radius, th);
      out.velocity = p.flyby_radius * n_fly * plane_tangent(th);
    } else {
      StateVector s = leg_table->sample(std::min(t, end_epoch) - t_coast_end);
      out.position = s.position.x() * u_esc;
      double speed = std::sqrt(v_inf * v_inf + 2.0 * gm / s.position.x());
      out.velocity = speed * u_esc;
    }
    return out;
  };

  EscapeSolution sol;
  sol.trajectory = Trajectory("escape", 0.0, p.waypoint_end_epoch, sampler);
  sol.transfer_duration = transfer;
  sol.coast_duration = coast;
  sol.v_infinity = v_inf;
  sol.escape_direction = u_esc;
  sol.plane_inclination = incl;
  return sol;
}

Trajectory escape_trajectory(const EscapeProfile& profile) {
  return solve_escape(profile).trajectory;
}

Trajectory propagate_perturbed(const StateVector& initial,
                               const metric::MetricModel& model,
                               double sunward_bias, double step, double t_end,
                               std::string label) {
  if (step <= 0.0) throw domain_error("dynamics", "step must be positive");
  if (t_end <= initial.epoch) throw domain_error("dynamics", "span must extend past the initial epoch");
  if (model.sources.empty()) throw domain_error("dynamics", "metric model has no sources");

  bool has_anomaly = std::holds_alternative<metric::AnomalyExtension>(model.extension);

  auto accel = [&](double t, const Vec3& x, bool perturbed) {
    Vec3 a = metric::newtonian_acceleration(model, x, t);
    if (!perturbed) return a;
    if (has_anomaly) a += metric::anomalous_acceleration(model, x, t);
    if (sunward_bias != 0.0) {
      Vec3 rel = x - model.sources.front().position_at(t);
      a -= sunward_bias * rel.normalized();
    }
    return a;
  };

  auto integrate = [&](bool perturbed) {
    std::vector<Node> nodes;
    nodes.reserve(static_cast<size_t>((t_end - initial.epoch) / step) + 2);
    double t = initial.epoch;
    Vec3 x = initial.position, v = initial.velocity;
    nodes.push_back({t, x, v});
    while (t < t_end) {
      double h = std::min(step, t_end - t);
      Vec3 k1x = v, k1v = accel(t, x, perturbed);
      Vec3 k2x = v + 0.5 * h * k1v, k2v = accel(t + 0.5 * h, x + 0.5 * h * k1x, perturbed);
      Vec3 k3x = v + 0.5 * h * k2v, k3v = accel(t + 0.5 * h, x + 0.5 * h * k2x, perturbed);
      Vec3 k4x = v + h * k3v, k4v = accel(t + h, x + h * k3x, perturbed);
      x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
      v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      t += h;
      nodes.push_back({t, x, v});
    }
    return nodes;
  };

  // Self-check: unperturbed companion must conserve two-body energy.
  auto reference = integrate(false);
  auto energy = [&](const Node& n) {
    return 0.5 * n.v.squaredNorm() - metric::newtonian_potential(model, n.x, n.t);
  };
  double e0 = energy(reference.front());
  double e1 = energy(reference.back());
  double drift = std::abs(e1 - e0) / std::abs(e0);
  double span = t_end - initial.epoch;
  double unit_time;
  if (e0 < 0.0) {
    double mu = 0.0;
    for (const auto& s : model.sources) mu += s.gm;
    double a = -mu / (2.0 * e0);
    unit_time = 2.0 * M_PI * std::sqrt(a * a * a / mu);
  } else {
    unit_time = constants::year;
  }
  double allowed = 1e-6 * std::max(1.0, span / unit_time);
  if (drift > allowed)
    throw accuracy_error("dynamics", "energy drift " + std::to_string(drift) +
                                         " exceeds bound " + std::to_string(allowed) +
                                         "; reduce the step");

  auto table = std::make_shared<HermiteTable>(integrate(true));
  return Trajectory(std::move(label), initial.epoch, t_end,
                    [table](double t) { return table->sample(t); });
}

}  // namespace clocksim::dynamics
