#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <utility>

#include "clocksim/errors.hpp"

namespace clocksim {

using Vec3 = Eigen::Vector3d;

// Position/velocity of a clock or body at a coordinate epoch, in a chosen
// inertial frame (heliocentric for deep-space missions, geocentric for
// Earth-orbit ones).
struct StateVector {
  double epoch = 0.0;  // s
  Vec3 position = Vec3::Zero();  // m
  Vec3 velocity = Vec3::Zero();  // m/s
};

// Time-indexed state source valid over a span. `at` must be continuous and
// consistent with its own velocity to second order in the step.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(std::string label, double t_begin, double t_end,
             std::function<StateVector(double)> sampler)
      : label_(std::move(label)),
        t_begin_(t_begin),
        t_end_(t_end),
        sampler_(std::move(sampler)) {}

  StateVector at(double epoch) const {
    if (!sampler_) throw domain_error("dynamics", "empty trajectory");
    if (epoch < t_begin_ || epoch > t_end_)
      throw domain_error("dynamics", "epoch " + std::to_string(epoch) +
                                         " outside trajectory span of '" + label_ + "'");
    return sampler_(epoch);
  }

  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }
  const std::string& label() const { return label_; }
  bool covers(double t0, double t1) const { return t0 >= t_begin_ && t1 <= t_end_; }

 private:
  std::string label_;
  double t_begin_ = 0.0;
  double t_end_ = 0.0;
  std::function<StateVector(double)> sampler_;
};

// Position source for a massive body (used by moving gravity sources).
using Ephemeris = std::function<Vec3(double)>;

}  // namespace clocksim
