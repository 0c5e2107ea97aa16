#include <cmath>

#include "doctest.h"

#include "clocksim/constants.hpp"
#include "clocksim/dynamics.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/metric.hpp"
#include "clocksim/noise.hpp"
#include "clocksim/observables.hpp"

using namespace clocksim;
using observables::Combination;

namespace {

metric::MetricModel earth_model() {
  metric::MetricModel m;
  m.sources = {metric::fixed_source("earth", constants::gm_earth, Vec3::Zero(),
                                    constants::r_earth)};
  return m;
}

metric::MetricModel sun_model() {
  metric::MetricModel m;
  m.sources = {metric::fixed_source("sun", constants::gm_sun, Vec3::Zero(),
                                    constants::r_sun)};
  return m;
}

Trajectory static_traj(const std::string& label, const Vec3& pos, double t0, double t1) {
  return Trajectory(label, t0, t1, [pos](double t) {
    StateVector s;
    s.epoch = t;
    s.position = pos;
    return s;
  });
}

dynamics::OrbitElements iss_elements() {
  dynamics::OrbitElements e;
  e.gm = constants::gm_earth;
  e.semi_major_axis = 6.778e6;
  e.eccentricity = 0.0;
  e.inclination = 51.6 * M_PI / 180.0;
  return e;
}

noise::FrequencySeries constant_series(double value, double t0, double span) {
  noise::FrequencySeries s;
  s.tau0 = 1.0;
  s.t_start = t0;
  s.values.assign(static_cast<size_t>(span) + 2, value);
  return s;
}

}  // namespace

TEST_SUITE("observables") {

TEST_CASE("identical states give zero shift; antisymmetry is exact") {
  metric::MetricModel m = earth_model();
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const StateVector g = dynamics::ground_station_state(eq, 0.0);
  const StateVector s = dynamics::kepler_state(iss_elements(), 0.0);

  const auto same = observables::fractional_frequency_shift(m, g, g);
  CHECK(same.total == 0.0);
  CHECK(same.gravitational == 0.0);
  CHECK(same.velocity == 0.0);

  const auto ab = observables::fractional_frequency_shift(m, g, s);
  const auto ba = observables::fractional_frequency_shift(m, s, g);
  CHECK(ab.total == -ba.total);
  CHECK(ab.gravitational == -ba.gravitational);
  CHECK(ab.velocity == -ba.velocity);
  CHECK(ab.total == ab.gravitational + ab.velocity);
}

TEST_CASE("equatorial ground vs low circular orbit shift terms") {
  // Hand values: grav GM/c^2 (1/6.378137e6 - 1/6.778e6) = +4.1022e-11,
  // velocity (465.1^2 - 7668.6^2)/2c^2 = -3.2595e-10, total -2.8492e-10.
  metric::MetricModel m = earth_model();
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const StateVector g = dynamics::ground_station_state(eq, 0.0);
  const StateVector s = dynamics::kepler_state(iss_elements(), 0.0);
  const auto shift = observables::fractional_frequency_shift(m, g, s);
  CHECK(shift.gravitational == doctest::Approx(4.1022e-11).epsilon(1e-3));
  CHECK(shift.velocity == doctest::Approx(-3.2595e-10).epsilon(1e-3));
  CHECK(shift.total == doctest::Approx(-2.8492e-10).epsilon(1e-3));
}

TEST_CASE("shift rejects states outside the weak-field domain") {
  metric::MetricModel m = earth_model();
  StateVector deep;
  deep.position = Vec3(2.0, 0, 0);  // |phi| ~ 1e-3 at r = 4.4 m
  StateVector fine;
  fine.position = Vec3(constants::r_earth, 0, 0);
  CHECK_THROWS_AS(observables::fractional_frequency_shift(m, deep, fine), domain_error);
}

TEST_CASE("proper time of a static far observer equals coordinate time") {
  metric::MetricModel empty;
  const auto traj = static_traj("far", Vec3(1e15, 0, 0), 0.0, 1.0e6);
  const double tau = observables::proper_time_elapsed(empty, traj, 0.0, 1.0e6);
  CHECK(std::abs(tau - 1.0e6) < 1e-8);
}

TEST_CASE("daily proper-time loss of the orbit clock matches the shift") {
  metric::MetricModel m = earth_model();
  const double day = 86400.0;
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, day);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, day);
  const double tau_s = observables::proper_time_elapsed(m, iss, 0.0, day);
  const double tau_g = observables::proper_time_elapsed(m, ground, 0.0, day);
  // space loses total * 86400 = 2.462e-5 s against the ground per day
  CHECK(tau_g - tau_s == doctest::Approx(2.8492e-10 * day).epsilon(0.01));
}

TEST_CASE("shift equals the derivative of the proper-time difference") {
  metric::MetricModel m = earth_model();
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, 7200.0);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, 7200.0);
  const double t = 3600.0, h = 300.0;
  const double dtau_s = observables::proper_time_elapsed(m, iss, t - h, t + h);
  const double dtau_g = observables::proper_time_elapsed(m, ground, t - h, t + h);
  const auto shift = observables::fractional_frequency_shift(
      m, dynamics::ground_station_state(eq, t), iss.at(t));
  CHECK((dtau_s - dtau_g) / (2.0 * h) == doctest::Approx(shift.total).epsilon(1e-4));
}

TEST_CASE("proper time outside the trajectory span is rejected") {
  metric::MetricModel empty;
  const auto traj = static_traj("short", Vec3(1e12, 0, 0), 0.0, 100.0);
  CHECK_THROWS_AS(observables::proper_time_elapsed(empty, traj, 50.0, 200.0), domain_error);
}

TEST_CASE("light time without gravity is euclidean distance over c") {
  metric::MetricModel empty;
  const auto a = static_traj("a", Vec3(0, 1e12, 0), 0.0, 2000.0);
  const auto b = static_traj("b", Vec3(constants::au, 1e12, 0), 0.0, 2000.0);
  const auto lt = observables::light_time(empty, a, b, 1000.0);
  CHECK(std::abs(lt.total - constants::au / constants::c) < 1e-12);
  CHECK(lt.total == doctest::Approx(499.005).epsilon(2e-6));
  CHECK(lt.shapiro == 0.0);
  CHECK(lt.reception_epoch - lt.emission_epoch == doctest::Approx(lt.total).epsilon(1e-15));

  const auto fwd = observables::light_time_forward(empty, a, b, lt.emission_epoch);
  CHECK(fwd.reception_epoch == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("light time iterates to self-consistency with a moving receiver") {
  metric::MetricModel m = earth_model();
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, 7200.0);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, 7200.0);
  const auto lt = observables::light_time(m, iss, ground, 120.0);  // near-overhead pass
  CHECK(lt.iterations <= 20);
  const Vec3 d = ground.at(lt.reception_epoch).position - iss.at(lt.emission_epoch).position;
  CHECK(lt.geometric == doctest::Approx(d.norm() / constants::c).epsilon(1e-12));
  CHECK(lt.total == doctest::Approx(lt.geometric + lt.shapiro).epsilon(1e-15));
  CHECK(lt.reception_epoch - lt.emission_epoch == doctest::Approx(lt.total).epsilon(1e-12));
}

TEST_CASE("grazing shapiro delay matches a straight-path quadrature") {
  // Emitter 1 AU from the sun, receiver 53 AU on the far side, ray passing
  // 2 solar radii above the center. Oracle: (1+gamma) GM/c^3 integral of
  // 1/r along the straight chord, composite Simpson.
  metric::MetricModel m = sun_model();
  const double b = 2.0 * constants::r_sun;
  const Vec3 em(-constants::au, b, 0);
  const Vec3 rc(53.0 * constants::au, b, 0);

  const double delay = observables::shapiro_delay(m, em, rc, 0.0);

  const Vec3 chord = rc - em;
  const size_t n = 200000;
  double acc = 1.0 / em.norm() + 1.0 / rc.norm();
  for (size_t i = 1; i < n; ++i) {
    const Vec3 x = em + (static_cast<double>(i) / n) * chord;
    acc += (i % 2 ? 4.0 : 2.0) / x.norm();
  }
  const double integral = acc * (chord.norm() / n) / 3.0;
  const double oracle = 2.0 * constants::gm_sun / std::pow(constants::c, 3) * integral;

  CHECK(delay == doctest::Approx(oracle).epsilon(5e-3));
  CHECK(delay == doctest::Approx(1.4530e-4).epsilon(5e-3));  // hand value, frozen
  CHECK(delay > 0.0);

  // Delay grows as the ray passes closer.
  const double farther =
      observables::shapiro_delay(m, Vec3(-constants::au, 2.0 * b, 0),
                                 Vec3(53.0 * constants::au, 2.0 * b, 0), 0.0);
  CHECK(farther < delay);

  // (1 + gamma) scaling: gamma = 2 gives 1.5x the gr delay.
  metric::MetricModel ppn = sun_model();
  ppn.extension = metric::PpnExtension{1.0, 2.0};
  CHECK(observables::shapiro_delay(ppn, em, rc, 0.0) ==
        doctest::Approx(1.5 * delay).epsilon(1e-12));
}

TEST_CASE("rays through a source body are occulted") {
  metric::MetricModel m = sun_model();
  const Vec3 em(-constants::au, 0.5 * constants::r_sun, 0);
  const Vec3 rc(53.0 * constants::au, 0.5 * constants::r_sun, 0);
  CHECK_THROWS_AS(observables::shapiro_delay(m, em, rc, 0.0), occultation_error);

  const auto a = static_traj("a", em, 0.0, 2.0e5);
  const auto bt = static_traj("b", rc, 0.0, 2.0e5);
  CHECK_THROWS_AS(observables::light_time(m, a, bt, 1.0e5), occultation_error);
}

TEST_CASE("static one-way doppler reduces to the clock shift") {
  metric::MetricModel m = sun_model();
  // 9 au separation: spans must cover emission 4491 s before reception.
  const auto deep = static_traj("deep", Vec3(constants::au, 0, 0), -6000.0, 6000.0);
  const auto high = static_traj("high", Vec3(10.0 * constants::au, 0, 0), -6000.0, 6000.0);
  observables::LinkGeometry link;
  link.space = &deep;
  link.ground = &high;
  link.model = &m;
  const double obs = observables::doppler_observable(link, Combination::one_way, 2000.0);
  const auto lt = observables::light_time(m, deep, high, 2000.0);
  const auto shift = observables::fractional_frequency_shift(m, high.at(2000.0),
                                                             deep.at(lt.emission_epoch));
  CHECK(obs == doctest::Approx(shift.total).epsilon(1e-6));
}

TEST_CASE("zero noise and symmetric static geometry gives zero doppler") {
  metric::MetricModel empty;
  const auto a = static_traj("a", Vec3(0, 1e12, 0), 0.0, 4000.0);
  const auto b = static_traj("b", Vec3(constants::au, 1e12, 0), 0.0, 4000.0);
  observables::LinkGeometry link;
  link.space = &a;
  link.ground = &b;
  link.model = &empty;
  CHECK(std::abs(observables::doppler_observable(link, Combination::one_way, 2000.0)) <
        1e-18);
}

TEST_CASE("noise enters one-way links with emitter-minus-receiver sign") {
  metric::MetricModel m = earth_model();
  const double scan = 7200.0;
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, scan);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, scan);
  observables::LinkGeometry link;
  link.space = &iss;
  link.ground = &ground;
  link.model = &m;

  // t = 120 s keeps the pass near overhead (at 3600 s the Earth occults it).
  const double det = observables::doppler_observable(link, Combination::one_way, 120.0);
  const auto space_noise = constant_series(0.125, 0.0, scan);
  const auto ground_noise = constant_series(0.0625, 0.0, scan);
  observables::LinkNoiseSeries series;
  series.space = &space_noise;
  series.ground = &ground_noise;
  const double noisy =
      observables::doppler_observable(link, Combination::one_way, 120.0, series);
  CHECK(noisy == det + 0.0625);  // exact: dyadic samples, emitter minus receiver
}

TEST_CASE("two-way combinations cancel the designated clock exactly") {
  metric::MetricModel m = earth_model();
  const double scan = 7200.0;
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, scan);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, scan);
  observables::LinkGeometry link;
  link.space = &iss;
  link.ground = &ground;
  link.model = &m;

  const double det_sat =
      observables::doppler_observable(link, Combination::two_way_satellite, 120.0);
  const auto huge = constant_series(1e-12, 0.0, scan);
  observables::LinkNoiseSeries only_space;
  only_space.space = &huge;
  CHECK(observables::doppler_observable(link, Combination::two_way_satellite, 120.0,
                                        only_space) == det_sat);

  const double det_ground =
      observables::doppler_observable(link, Combination::two_way_ground, 120.0);
  observables::LinkNoiseSeries only_ground;
  only_ground.ground = &huge;
  CHECK(observables::doppler_observable(link, Combination::two_way_ground, 120.0,
                                        only_ground) == det_ground);
}

TEST_CASE("common view cancels the space clock and differences the stations") {
  metric::MetricModel m = earth_model();
  const double scan = 7200.0;
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, scan);
  dynamics::GroundStation ga{"ga", 0.0, 0.0};
  dynamics::GroundStation gb{"gb", 0.1, 0.2};
  const auto ta = dynamics::ground_station_trajectory(ga, 0.0, scan);
  const auto tb = dynamics::ground_station_trajectory(gb, 0.0, scan);
  observables::LinkGeometry link;
  link.space = &iss;
  link.ground = &ta;
  link.ground_b = &tb;
  link.model = &m;

  const double det =
      observables::doppler_observable(link, Combination::common_view, 120.0);
  const auto huge = constant_series(1e-13, 0.0, scan);
  observables::LinkNoiseSeries only_space;
  only_space.space = &huge;
  CHECK(observables::doppler_observable(link, Combination::common_view, 120.0,
                                        only_space) == det);

  observables::LinkGeometry missing = link;
  missing.ground_b = nullptr;
  CHECK_THROWS_AS(observables::doppler_observable(missing, Combination::common_view, 120.0),
                  domain_error);
}

TEST_CASE("noise series must cover the signal legs") {
  metric::MetricModel m = earth_model();
  const double scan = 7200.0;
  const auto iss = dynamics::kepler_trajectory("iss", iss_elements(), 0.0, scan);
  dynamics::GroundStation eq{"eq", 0.0, 0.0};
  const auto ground = dynamics::ground_station_trajectory(eq, 0.0, scan);
  observables::LinkGeometry link;
  link.space = &iss;
  link.ground = &ground;
  link.model = &m;
  const auto late = constant_series(1e-15, 120.0, 10.0);  // misses the emission epoch
  observables::LinkNoiseSeries series;
  series.space = &late;
  CHECK_THROWS_AS(
      observables::doppler_observable(link, Combination::one_way, 120.0, series),
      domain_error);
}

}  // TEST_SUITE
