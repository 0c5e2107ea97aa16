#include "clocksim/observables.hpp"

#include <cmath>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim::observables {

namespace {

using constants::c;
using constants::c2;

void check_weak_field(const metric::MetricModel& model, const StateVector& s) {
  double w = metric::newtonian_potential(model, s.position, s.epoch);
  if (w / c2 >= 1e-3) throw domain_error("observables", "weak-field expansion invalid");
}

}  // namespace

FrequencyShift fractional_frequency_shift(const metric::MetricModel& model,
                                          const StateVector& reference,
                                          const StateVector& target) {
  check_weak_field(model, reference);
  check_weak_field(model, target);
  double w_ref = metric::newtonian_potential(model, reference.position, reference.epoch);
  double w_tgt = metric::newtonian_potential(model, target.position, target.epoch);
  FrequencyShift out;
  out.gravitational = (w_ref - w_tgt) / c2;
  out.velocity = (reference.velocity.squaredNorm() - target.velocity.squaredNorm()) / (2.0 * c2);
  out.total = out.gravitational + out.velocity;
  return out;
}

double proper_time_elapsed(const metric::MetricModel& model, const Trajectory& clock,
                           double t0, double t1) {
  if (t1 < t0) throw domain_error("observables", "interval end precedes start");
  if (!clock.covers(t0, t1))
    throw domain_error("observables", "interval outside trajectory span");
  if (t1 == t0) return 0.0;

  metric::PpnExtension ppn = metric::effective_ppn(model);
  // deviation = sqrt(g00 - (v^2/c^2)(-grr)) - 1, evaluated without
  // subtracting nearly equal quantities.
  auto deviation = [&](double t) {
    StateVector s = clock.at(t);
    double phi = metric::reduced_potential(model, s.position, s.epoch);
    double beta2 = s.velocity.squaredNorm() / c2;
    double num = 2.0 * phi + 2.0 * ppn.beta * phi * phi - beta2 * (1.0 - 2.0 * ppn.gamma * phi);
    return num / (std::sqrt(1.0 + num) + 1.0);
  };

  auto simpson = [&](size_t intervals) {
    double h = (t1 - t0) / static_cast<double>(intervals);
    double acc = deviation(t0) + deviation(t1);
    for (size_t i = 1; i < intervals; ++i)
      acc += (i % 2 ? 4.0 : 2.0) * deviation(t0 + static_cast<double>(i) * h);
    return acc * h / 3.0;
  };

  double prev = simpson(64);
  for (size_t n = 128; n <= (1u << 21); n *= 2) {
    double cur = simpson(n);
    if (std::abs(cur - prev) <= 1e-9 * std::abs(cur) + 1e-30) return (t1 - t0) + cur;
    prev = cur;
  }
  throw numeric_error("observables", "proper-time quadrature failed to converge");
}

double shapiro_delay(const metric::MetricModel& model, const Vec3& emitter,
                     const Vec3& receiver, double epoch) {
  metric::PpnExtension ppn = metric::effective_ppn(model);
  Vec3 chord = receiver - emitter;
  double big_r = chord.norm();
  if (big_r <= 0.0) throw domain_error("observables", "emitter and receiver coincide");

  double delay = 0.0;
  for (const auto& src : model.sources) {
    Vec3 center = src.position_at(epoch);
    double r_e = (emitter - center).norm();
    double r_r = (receiver - center).norm();

    if (src.body_radius > 0.0) {
      // Closest approach of the chord to the body center.
      double s = (center - emitter).dot(chord) / (big_r * big_r);
      if (s > 0.0 && s < 1.0) {
        double miss = (emitter + s * chord - center).norm();
        if (miss < src.body_radius)
          throw occultation_error("observables",
                                  "signal path intersects '" + src.label + "'");
      }
    }

    double denom = r_e + r_r - big_r;
    if (denom <= 0.0)
      throw domain_error("observables", "degenerate geometry for source '" + src.label + "'");
    delay += (1.0 + ppn.gamma) * src.gm / (c2 * c) * std::log((r_e + r_r + big_r) / denom);
  }
  return delay;
}

namespace {

LightTimeResult solve_light_time(const metric::MetricModel& model, const Trajectory& emitter,
                                 const Trajectory& receiver, double fixed_epoch,
                                 bool fixed_is_reception) {
  LightTimeResult res;
  double t_fix = fixed_epoch;
  StateVector fixed_state = (fixed_is_reception ? receiver : emitter).at(t_fix);
  double guess = 1.0;
  {
    StateVector other = (fixed_is_reception ? emitter : receiver).at(t_fix);
    guess = (other.position - fixed_state.position).norm() / c;
  }
  double delay = guess;
  for (int iter = 1; iter <= 20; ++iter) {
    double t_other = fixed_is_reception ? t_fix - delay : t_fix + delay;
    StateVector other = (fixed_is_reception ? emitter : receiver).at(t_other);
    const Vec3& em = fixed_is_reception ? other.position : fixed_state.position;
    const Vec3& rc = fixed_is_reception ? fixed_state.position : other.position;
    double mid_epoch = fixed_is_reception ? t_fix - 0.5 * delay : t_fix + 0.5 * delay;
    double geometric = (rc - em).norm() / c;
    double shap = shapiro_delay(model, em, rc, mid_epoch);
    double next = geometric + shap;
    bool done = std::abs(next - delay) < 1e-12;
    delay = next;
    if (done) {
      res.total = delay;
      res.geometric = geometric;
      res.shapiro = shap;
      res.iterations = iter;
      res.reception_epoch = fixed_is_reception ? t_fix : t_fix + delay;
      res.emission_epoch = fixed_is_reception ? t_fix - delay : t_fix;
      return res;
    }
  }
  throw numeric_error("observables", "light-time iteration failed to converge");
}

}  // namespace

LightTimeResult light_time(const metric::MetricModel& model, const Trajectory& emitter,
                           const Trajectory& receiver, double reception_epoch) {
  return solve_light_time(model, emitter, receiver, reception_epoch, true);
}

LightTimeResult light_time_forward(const metric::MetricModel& model,
                                   const Trajectory& emitter, const Trajectory& receiver,
                                   double emission_epoch) {
  return solve_light_time(model, emitter, receiver, emission_epoch, false);
}

namespace {

// Fractional frequency observable of one leg as seen by the receiver:
// relativistic clock shift plus first-order Doppler. The Doppler rate uses
// the analytic geometric derivative (finite-differencing only the small
// Shapiro part to keep numerical noise below 1e-18).
double leg_observable(const metric::MetricModel& model, const Trajectory& emitter_traj,
                      const Trajectory& receiver_traj, const LightTimeResult& lt) {
  StateVector em = emitter_traj.at(lt.emission_epoch);
  StateVector rc = receiver_traj.at(lt.reception_epoch);

  FrequencyShift clock_shift = fractional_frequency_shift(model, rc, em);

  Vec3 n = (rc.position - em.position).normalized();
  double shap_dot = 0.0;
  {
    const double h = 60.0;
    auto shap_at = [&](double t_r) {
      return solve_light_time(model, emitter_traj, receiver_traj, t_r, true).shapiro;
    };
    shap_dot = (shap_at(lt.reception_epoch + h) - shap_at(lt.reception_epoch - h)) / (2.0 * h);
  }
  double rate = (n.dot(rc.velocity - em.velocity) / c + shap_dot) /
                (1.0 - n.dot(em.velocity) / c);
  return clock_shift.total - rate;
}

double sample(const noise::FrequencySeries* s, double epoch) {
  return s ? s->value_at(epoch) : 0.0;
}

}  // namespace

double doppler_observable(const LinkGeometry& link, Combination combination, double epoch,
                          const LinkNoiseSeries& noise_series) {
  if (!link.space || !link.ground || !link.model)
    throw domain_error("observables", "link geometry incomplete");
  const auto& model = *link.model;

  // Deterministic leg sums and clock-noise sums are accumulated separately,
  // with each clock's emission/reception samples paired before anything large
  // is added; the designated clock's pair then cancels exactly in IEEE
  // arithmetic instead of to rounding level.
  switch (combination) {
    case Combination::one_way: {
      auto lt = light_time(model, *link.space, *link.ground, epoch);
      double det = leg_observable(model, *link.space, *link.ground, lt);
      double noise = sample(noise_series.space, lt.emission_epoch) -
                     sample(noise_series.ground, lt.reception_epoch);
      return det + noise;
    }
    case Combination::two_way_satellite: {
      auto up = light_time(model, *link.ground, *link.space, epoch);
      auto down = light_time_forward(model, *link.space, *link.ground, epoch);
      double det = leg_observable(model, *link.ground, *link.space, up) +
                   leg_observable(model, *link.space, *link.ground, down);
      double space_pair =
          sample(noise_series.space, epoch) - sample(noise_series.space, epoch);
      double noise = space_pair + sample(noise_series.ground, up.emission_epoch) -
                     sample(noise_series.ground, down.reception_epoch);
      return det + noise;
    }
    case Combination::two_way_ground: {
      auto up = light_time_forward(model, *link.ground, *link.space, epoch);
      auto down = light_time(model, *link.space, *link.ground, epoch);
      double det = leg_observable(model, *link.ground, *link.space, up) +
                   leg_observable(model, *link.space, *link.ground, down);
      double ground_pair =
          sample(noise_series.ground, epoch) - sample(noise_series.ground, epoch);
      double noise = ground_pair + sample(noise_series.space, down.emission_epoch) -
                     sample(noise_series.space, up.reception_epoch);
      return det + noise;
    }
    case Combination::common_view: {
      if (!link.ground_b)
        throw domain_error("observables", "common view needs a second station");
      auto to_a = light_time_forward(model, *link.space, *link.ground, epoch);
      auto to_b = light_time_forward(model, *link.space, *link.ground_b, epoch);
      double det = leg_observable(model, *link.space, *link.ground, to_a) -
                   leg_observable(model, *link.space, *link.ground_b, to_b);
      double space_pair =
          sample(noise_series.space, epoch) - sample(noise_series.space, epoch);
      double noise = space_pair + sample(noise_series.ground_b, to_b.reception_epoch) -
                     sample(noise_series.ground, to_a.reception_epoch);
      return det + noise;
    }
  }
  throw domain_error("observables", "unknown combination");
}

}  // namespace clocksim::observables
