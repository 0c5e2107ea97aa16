#include <cmath>
#include <vector>

#include "doctest.h"

#include "clocksim/errors.hpp"
#include "clocksim/missions.hpp"
#include "clocksim/noise.hpp"

using namespace clocksim;

namespace {

double sample_std(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

TEST_SUITE("noise") {

TEST_CASE("series samples map epochs by flooring and reject gaps") {
  noise::FrequencySeries s;
  s.tau0 = 2.0;
  s.t_start = 100.0;
  s.values = {1.0, 2.0, 3.0};
  CHECK(s.span() == 6.0);
  CHECK(s.value_at(100.0) == 1.0);
  CHECK(s.value_at(101.999) == 1.0);
  CHECK(s.value_at(102.0) == 2.0);
  CHECK(s.value_at(105.9) == 3.0);
  CHECK_THROWS_AS(s.value_at(99.9), domain_error);
  CHECK_THROWS_AS(s.value_at(106.0), domain_error);
}

TEST_CASE("uniform bias bound converts to a sqrt(3) sigma") {
  CHECK(noise::bias_sigma(3.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(noise::bias_sigma(0.0) == 0.0);
}

TEST_CASE("clock model deviation is the quadrature sum of its terms") {
  noise::ClockModel m{"mix", 2e-13, 5e-16, 3e-17, 1e-20, 0.0};
  for (double tau : {1.0, 30.0, 1000.0, 86400.0}) {
    const double expect = std::sqrt(m.white_fm * m.white_fm / tau +
                                    m.flicker_fm * m.flicker_fm +
                                    m.random_walk_fm * m.random_walk_fm * tau +
                                    0.5 * m.drift_rate * m.drift_rate * tau * tau);
    CHECK(noise::clock_adev_model(m, tau) == doctest::Approx(expect).epsilon(1e-14));
  }
  CHECK_THROWS_AS(noise::clock_adev_model(m, 0.0), domain_error);
}

TEST_CASE("pure frequency drift gives adev = drift * tau / sqrt(2) exactly") {
  noise::ClockModel m{"drift", 0.0, 0.0, 0.0, 1e-15, 0.0};
  const auto s = noise::synthesize_clock_noise(m, 4096, 1.0, 1);
  const std::vector<double> taus = {1.0, 4.0, 64.0, 1024.0};
  const auto adev = noise::allan_deviation(s, taus);
  for (size_t i = 0; i < taus.size(); ++i)
    CHECK(adev[i] == doctest::Approx(1e-15 * taus[i] / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("accuracy bound yields a constant bias, uniform across seeds") {
  noise::ClockModel m{"bias", 0.0, 0.0, 0.0, 0.0, 1e-14};
  std::vector<double> draws;
  for (uint64_t seed = 0; seed < 600; ++seed) {
    const auto s = noise::synthesize_clock_noise(m, 4, 1.0, seed);
    CHECK(s.values[0] == s.values[1]);
    CHECK(s.values[0] == s.values[3]);
    CHECK(std::abs(s.values[0]) <= 1e-14);
    draws.push_back(s.values[0]);
  }
  // uniform on [-b, b] has sigma b/sqrt(3)
  CHECK(sample_std(draws) == doctest::Approx(1e-14 / std::sqrt(3.0)).epsilon(0.15));
}

TEST_CASE("cs clock deviation follows its white-frequency model") {
  const auto pharao = missions::aces_baseline().pharao;
  const auto s = noise::synthesize_clock_noise(pharao, 200000, 1.0, 42);
  const std::vector<double> taus = {1.0, 10.0, 100.0, 1000.0};
  const auto adev = noise::allan_deviation(s, taus);
  for (size_t i = 0; i < taus.size(); ++i) {
    const double model = noise::clock_adev_model(pharao, taus[i]);
    CHECK(model == doctest::Approx(1e-13 / std::sqrt(taus[i])).epsilon(1e-12));
    CHECK(adev[i] == doctest::Approx(model).epsilon(0.20));
  }
}

TEST_CASE("maser deviation meets its flicker floor at ten thousand seconds") {
  const auto shm = missions::aces_baseline().shm;
  const auto s = noise::synthesize_clock_noise(shm, 100000, 10.0, 7);
  const double adev = noise::allan_deviation(s, {1.0e4}).front();
  const double model = noise::clock_adev_model(shm, 1.0e4);
  CHECK(model == doctest::Approx(1.565e-15).epsilon(1e-3));
  CHECK(adev == doctest::Approx(model).epsilon(0.25));
}

TEST_CASE("random-walk frequency deviation grows as sqrt(tau)") {
  noise::ClockModel m{"rw", 0.0, 0.0, 1e-16, 0.0, 0.0};
  const auto s = noise::synthesize_clock_noise(m, 65536, 1.0, 3);
  const auto adev = noise::allan_deviation(s, {16.0, 1024.0});
  CHECK(adev[0] == doctest::Approx(1e-16 * 4.0).epsilon(0.35));
  CHECK(adev[1] == doctest::Approx(1e-16 * 32.0).epsilon(0.35));
}

TEST_CASE("flicker cascade holds a flat deviation across decades") {
  noise::ClockModel m{"flicker", 0.0, 1e-15, 0.0, 0.0, 0.0};
  const auto s = noise::synthesize_clock_noise(m, 131072, 1.0, 11);
  const auto adev = noise::allan_deviation(s, {100.0, 1000.0});
  CHECK(adev[0] == doctest::Approx(1e-15).epsilon(0.25));
  CHECK(adev[1] == doctest::Approx(1e-15).epsilon(0.25));
}

TEST_CASE("clock synthesis is seed-deterministic") {
  noise::ClockModel m{"det", 1e-13, 1e-15, 1e-16, 1e-19, 1e-16};
  const auto a = noise::synthesize_clock_noise(m, 512, 1.0, 99);
  const auto b = noise::synthesize_clock_noise(m, 512, 1.0, 99);
  CHECK(a.values == b.values);
  const auto c = noise::synthesize_clock_noise(m, 512, 1.0, 100);
  CHECK(a.values != c.values);
  CHECK_THROWS_AS(noise::synthesize_clock_noise(m, 0, 1.0, 1), domain_error);
  CHECK_THROWS_AS(noise::synthesize_clock_noise(m, 16, 0.0, 1), domain_error);
}

TEST_CASE("accelerometer white level scales with the sampling bandwidth") {
  noise::AccelerometerModel m{"accel", 1e-9, 0.0};
  const auto s = noise::synthesize_accel_noise(m, 100000, 4.0, 17);
  CHECK(sample_std(s.values) == doctest::Approx(1e-9 / 2.0).epsilon(0.05));

  noise::AccelerometerModel bias_only{"accel", 0.0, 5e-11};
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = noise::synthesize_accel_noise(bias_only, 8, 1.0, seed);
    CHECK(std::abs(b.values[0]) <= 5e-11);
    CHECK(b.values[0] == b.values[7]);
  }
  const auto d1 = noise::synthesize_accel_noise(m, 64, 1.0, 5);
  const auto d2 = noise::synthesize_accel_noise(m, 64, 1.0, 5);
  CHECK(d1.values == d2.values);
}

TEST_CASE("single-point link budget pins the white-frequency coefficient") {
  // At tau = 6 s the white-FM tdev is c * sqrt(tau/6) = c, so the fitted
  // coefficient equals the point value.
  noise::LinkNoiseModel link;
  link.tdev_points = {{6.0, 5e-13}};
  CHECK(noise::link_white_fm_coefficient(link) == doctest::Approx(5e-13).epsilon(1e-12));
  link.turbulence = 3e-13;
  for (double tau : {6.0, 60.0, 600.0}) {
    const double expect = std::sqrt(25e-26 * tau / 6.0 + 9e-26 / 9.0);
    CHECK(noise::link_tdev_model(link, tau) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("budget interpolation passes through its anchor points") {
  const auto mwl = missions::aces_baseline().mwl;
  CHECK(noise::link_tdev_budget(mwl, 300.0) == doctest::Approx(0.3e-12).epsilon(1e-12));
  CHECK(noise::link_tdev_budget(mwl, 86400.0) == doctest::Approx(7e-12).epsilon(1e-12));
  CHECK(noise::link_tdev_budget(mwl, 864000.0) == doctest::Approx(23e-12).epsilon(1e-12));
  // log-log linear between anchors: geometric midpoint maps to the geometric
  // mean of the neighboring values
  CHECK(noise::link_tdev_budget(mwl, std::sqrt(300.0 * 86400.0)) ==
        doctest::Approx(std::sqrt(0.3e-12 * 7e-12)).epsilon(1e-9));

  noise::LinkNoiseModel single;
  single.tdev_points = {{100.0, 2e-12}};
  CHECK(noise::link_tdev_budget(single, 7.0) == 2e-12);
  noise::LinkNoiseModel empty;
  CHECK_THROWS_AS(noise::link_tdev_budget(empty, 100.0), domain_error);
}

TEST_CASE("fitted link model stays near the budget it was fitted to") {
  const auto mwl = missions::aces_baseline().mwl;
  for (const auto& [tau, tdev] : mwl.tdev_points)
    CHECK(noise::link_tdev_model(mwl, tau) == doctest::Approx(tdev).epsilon(0.30));
}

TEST_CASE("synthesized link time deviation tracks the fitted model") {
  const auto mwl = missions::aces_baseline().mwl;
  const auto s = noise::synthesize_link_noise(mwl, 65536, 30.0, 5);
  const std::vector<double> taus = {300.0, 3000.0, 30000.0};
  const auto tdev = noise::time_deviation(s, taus);
  for (size_t i = 0; i < taus.size(); ++i)
    CHECK(tdev[i] == doctest::Approx(noise::link_tdev_model(mwl, taus[i])).epsilon(0.25));
}

TEST_CASE("turbulence-only link behaves as white phase noise") {
  noise::LinkNoiseModel link;
  link.turbulence = 3e-13;
  const auto s = noise::synthesize_link_noise(link, 100000, 10.0, 9);
  const auto adev = noise::allan_deviation(s, {10.0, 100.0});
  CHECK(adev[0] == doctest::Approx(3e-13 / 10.0).epsilon(0.30));
  CHECK(adev[1] == doctest::Approx(3e-13 / 100.0).epsilon(0.30));
  // the model anchors the flat tdev term at the three-sample average
  const double tdev3 = noise::time_deviation(s, {30.0}).front();
  CHECK(tdev3 == doctest::Approx(3e-13 / 3.0).epsilon(0.30));
  CHECK(noise::link_tdev_model(link, 1234.0) ==
        doctest::Approx(3e-13 / 3.0).epsilon(1e-12));
}

TEST_CASE("deviation estimators reject malformed averaging times") {
  noise::ClockModel m{"w", 1e-13, 0.0, 0.0, 0.0, 0.0};
  const auto s = noise::synthesize_clock_noise(m, 1024, 1.0, 1);
  CHECK_THROWS_AS(noise::allan_deviation(s, {2.5}), domain_error);
  CHECK_THROWS_AS(noise::allan_deviation(s, {0.5}), domain_error);
  CHECK_THROWS_AS(noise::allan_deviation(s, {512.0}), domain_error);  // > span/4
  CHECK_THROWS_AS(noise::time_deviation(s, {2.5}), domain_error);
  CHECK_THROWS_AS(noise::time_deviation(s, {512.0}), domain_error);
  CHECK_NOTHROW(noise::allan_deviation(s, {256.0}));
}

TEST_CASE("link synthesis is seed-deterministic and zero for an empty model") {
  const auto mwl = missions::aces_baseline().mwl;
  const auto a = noise::synthesize_link_noise(mwl, 256, 30.0, 21);
  const auto b = noise::synthesize_link_noise(mwl, 256, 30.0, 21);
  CHECK(a.values == b.values);
  const auto c = noise::synthesize_link_noise(mwl, 256, 30.0, 22);
  CHECK(a.values != c.values);

  noise::LinkNoiseModel empty;
  const auto z = noise::synthesize_link_noise(empty, 16, 1.0, 1);
  for (double v : z.values) CHECK(v == 0.0);
}

}  // TEST_SUITE
