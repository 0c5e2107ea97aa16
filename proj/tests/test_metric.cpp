#include <cmath>
#include <random>

#include "doctest.h"

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/metric.hpp"

using namespace clocksim;
using metric::MetricModel;

namespace {

MetricModel sun_model() {
  MetricModel m;
  m.sources = {metric::fixed_source("sun", constants::gm_sun, Vec3::Zero(),
                                    constants::r_sun)};
  return m;
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("reduced potential at 1 AU matches the hand value") {
  MetricModel m = sun_model();
  const double phi = metric::reduced_potential(m, Vec3(constants::au, 0, 0), 0.0);
  // GM_sun / (c^2 * 1 AU) = 9.8707e-9, worked out on paper once and frozen.
  CHECK(phi == doctest::Approx(-9.8707e-9).epsilon(1e-4));
  CHECK(metric::newtonian_potential(m, Vec3(constants::au, 0, 0), 0.0) ==
        doctest::Approx(-phi * constants::c2).epsilon(1e-12));
}

TEST_CASE("two-point potential difference between 1 AU and 50 AU") {
  MetricModel m = sun_model();
  const double phi_1 = metric::reduced_potential(m, Vec3(constants::au, 0, 0), 0.0);
  const double phi_50 = metric::reduced_potential(m, Vec3(50.0 * constants::au, 0, 0), 0.0);
  CHECK(phi_50 - phi_1 == doctest::Approx(9.674e-9).epsilon(1e-3));
}

TEST_CASE("superposition is exact") {
  MetricModel a, b, both;
  const Vec3 p1(2.0e11, 1.0e10, -3.0e10);
  const Vec3 p2(-5.0e10, 7.0e10, 2.0e11);
  a.sources = {metric::fixed_source("s1", 1.3e20, p1)};
  b.sources = {metric::fixed_source("s2", 4.0e14, p2)};
  both.sources = {a.sources[0], b.sources[0]};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-4.0e11, 4.0e11);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x(u(rng), u(rng), u(rng));
    const double sum = metric::newtonian_potential(a, x, 0.0) +
                       metric::newtonian_potential(b, x, 0.0);
    CHECK(metric::newtonian_potential(both, x, 0.0) == doctest::Approx(sum).epsilon(1e-15));
  }
}

TEST_CASE("ppn with beta=gamma=1 reproduces plain gr exactly") {
  MetricModel gr = sun_model();
  MetricModel ppn = sun_model();
  ppn.extension = metric::PpnExtension{1.0, 1.0};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.3, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 x = u(rng) * constants::au * Vec3(std::cos(i), std::sin(i), 0.01).normalized();
    const auto c_gr = metric::metric_coefficients(gr, x, 0.0);
    const auto c_ppn = metric::metric_coefficients(ppn, x, 0.0);
    CHECK(c_gr.g00 == c_ppn.g00);
    CHECK(c_gr.grr == c_ppn.grr);
  }
}

TEST_CASE("gamma scales the space-curvature deviation linearly") {
  MetricModel gr = sun_model();
  MetricModel ppn = sun_model();
  ppn.extension = metric::PpnExtension{1.0, 2.0};
  const Vec3 x(3.0 * constants::au, 0, 0);
  const double dev_gr = metric::metric_coefficients(gr, x, 0.0).grr + 1.0;
  const double dev_ppn = metric::metric_coefficients(ppn, x, 0.0).grr + 1.0;
  CHECK(dev_ppn == doctest::Approx(2.0 * dev_gr).epsilon(1e-14));
  CHECK(metric::effective_ppn(ppn).gamma == 2.0);
  CHECK(metric::effective_ppn(gr).gamma == 1.0);
  CHECK(metric::effective_ppn(gr).beta == 1.0);
}

TEST_CASE("weak-field coefficients approach flat space far away") {
  MetricModel m = sun_model();
  double prev_g00_dev = 1.0, prev_grr_dev = 1.0;
  for (double r = 1.0; r <= 1000.0; r *= 10.0) {
    const auto c = metric::metric_coefficients(m, Vec3(r * constants::au, 0, 0), 0.0);
    const double g00_dev = std::abs(c.g00 - 1.0);
    const double grr_dev = std::abs(c.grr + 1.0);
    CHECK(g00_dev < prev_g00_dev);
    CHECK(grr_dev < prev_grr_dev);
    prev_g00_dev = g00_dev;
    prev_grr_dev = grr_dev;
  }
}

TEST_CASE("weak-field guard rejects strong fields") {
  MetricModel m = sun_model();
  // |phi| at 1e-3: r = GM/(1e-3 c^2) ~ 1.5e6 m; go inside that.
  CHECK_THROWS_AS(metric::metric_coefficients(m, Vec3(1.0e6, 0, 0), 0.0), domain_error);
}

TEST_CASE("yukawa scaling against the closed form") {
  MetricModel newton = sun_model();
  MetricModel yuk = sun_model();
  const double alpha = 1.0e-3;
  yuk.extension = metric::YukawaExtension{alpha, constants::au};

  const Vec3 at_range(constants::au, 0, 0);
  const double w0 = metric::newtonian_potential(newton, at_range, 0.0);
  const double w = metric::newtonian_potential(yuk, at_range, 0.0);
  CHECK(w / w0 - 1.0 == doctest::Approx(alpha / std::exp(1.0)).epsilon(1e-10));

  // Short range: full (1 + alpha) enhancement below lambda/1000.
  const Vec3 close(constants::au / 2000.0, 0, 0);
  const double ratio_close = metric::newtonian_potential(yuk, close, 0.0) /
                             metric::newtonian_potential(newton, close, 0.0);
  CHECK(ratio_close == doctest::Approx(1.0 + alpha).epsilon(1e-3));

  // Long range: Newtonian again beyond 20 lambda.
  const Vec3 far(25.0 * constants::au, 0, 0);
  const double ratio_far = metric::newtonian_potential(yuk, far, 0.0) /
                           metric::newtonian_potential(newton, far, 0.0);
  CHECK(ratio_far == doctest::Approx(1.0).epsilon(1e-3));

  // alpha = 0 is Newton on random inputs.
  MetricModel null_yuk = sun_model();
  null_yuk.extension = metric::YukawaExtension{0.0, constants::au};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.2, 50.0);
  for (int i = 0; i < 50; ++i) {
    const Vec3 x(u(rng) * constants::au, u(rng) * constants::au, 0);
    CHECK(metric::newtonian_potential(null_yuk, x, 0.0) ==
          metric::newtonian_potential(newton, x, 0.0));
  }
}

TEST_CASE("anomalous acceleration obeys the onset radius") {
  MetricModel m = sun_model();
  m.extension = metric::AnomalyExtension{8.7e-10, 15.0 * constants::au};

  const Vec3 inside(7.5 * constants::au, 0, 0);
  CHECK(metric::anomalous_acceleration(m, inside, 0.0).norm() == 0.0);

  const Vec3 outside(0, 20.0 * constants::au, 0);
  const Vec3 a = metric::anomalous_acceleration(m, outside, 0.0);
  CHECK(a.norm() == doctest::Approx(8.7e-10).epsilon(1e-12));
  // Sunward: toward the primary source at the origin.
  CHECK(a.normalized().dot(-outside.normalized()) == doctest::Approx(1.0).epsilon(1e-12));

  MetricModel null_anomaly = sun_model();
  null_anomaly.extension = metric::AnomalyExtension{0.0, 15.0 * constants::au};
  CHECK(metric::anomalous_acceleration(null_anomaly, outside, 0.0).norm() == 0.0);

  MetricModel plain = sun_model();
  CHECK_THROWS_AS(metric::anomalous_acceleration(plain, outside, 0.0), variant_error);
}

TEST_CASE("newtonian acceleration is inverse-square and central") {
  MetricModel m = sun_model();
  const Vec3 x(2.0 * constants::au, constants::au, 0);
  const Vec3 a = metric::newtonian_acceleration(m, x, 0.0);
  CHECK(a.norm() ==
        doctest::Approx(constants::gm_sun / x.squaredNorm()).epsilon(1e-14));
  CHECK(a.normalized().dot(-x.normalized()) == doctest::Approx(1.0).epsilon(1e-14));

  // Mirrored pair cancels at the midpoint.
  MetricModel pair;
  pair.sources = {metric::fixed_source("a", 1e20, Vec3(constants::au, 0, 0)),
                  metric::fixed_source("b", 1e20, Vec3(-constants::au, 0, 0))};
  CHECK(metric::newtonian_acceleration(pair, Vec3::Zero(), 0.0).norm() == 0.0);
}

TEST_CASE("moving sources follow their ephemeris") {
  MetricModel m;
  metric::GravitySource s = metric::fixed_source("mover", constants::gm_earth, Vec3::Zero());
  s.ephemeris = [](double t) { return Vec3(constants::au + 1.0e9 * t, 0, 0); };
  m.sources = {s};
  const Vec3 x(0, 0, 0);
  const double w0 = metric::newtonian_potential(m, x, 0.0);
  const double w1 = metric::newtonian_potential(m, x, 1.0);
  CHECK(w0 == doctest::Approx(constants::gm_earth / constants::au).epsilon(1e-12));
  CHECK(w1 == doctest::Approx(constants::gm_earth / (constants::au + 1.0e9)).epsilon(1e-12));
}

}  // TEST_SUITE
