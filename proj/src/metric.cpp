#include "clocksim/metric.hpp"

#include <cmath>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim::metric {

namespace {

constexpr double coincidence_threshold = 1e-6;  // m

double source_distance(const GravitySource& src, const Vec3& position, double epoch) {
  double r = (position - src.position_at(epoch)).norm();
  if (r < coincidence_threshold)
    throw singularity_error("metric", "field point coincides with source '" + src.label + "'");
  return r;
}

}  // namespace

GravitySource fixed_source(std::string label, double gm, const Vec3& position,
                           double body_radius) {
  GravitySource src;
  src.label = std::move(label);
  src.gm = gm;
  src.fixed_position = position;
  src.body_radius = body_radius;
  return src;
}

double newtonian_potential(const MetricModel& model, const Vec3& position, double epoch) {
  const auto* yukawa = std::get_if<YukawaExtension>(&model.extension);
  double w = 0.0;
  for (const auto& src : model.sources) {
    double r = source_distance(src, position, epoch);
    double term = src.gm / r;
    if (yukawa) term *= 1.0 + yukawa->alpha * std::exp(-r / yukawa->range);
    w += term;
  }
  return w;
}

double reduced_potential(const MetricModel& model, const Vec3& position, double epoch) {
  return -newtonian_potential(model, position, epoch) / constants::c2;
}

MetricCoefficients metric_coefficients(const MetricModel& model, const Vec3& position,
                                       double epoch) {
  double phi = reduced_potential(model, position, epoch);
  if (std::abs(phi) >= 1e-3)
    throw domain_error("metric", "weak-field expansion invalid, |phi| = " + std::to_string(std::abs(phi)));
  PpnExtension ppn = effective_ppn(model);
  MetricCoefficients g;
  g.g00 = 1.0 + 2.0 * phi + 2.0 * ppn.beta * phi * phi;
  g.grr = -1.0 + 2.0 * ppn.gamma * phi;
  return g;
}

Vec3 anomalous_acceleration(const MetricModel& model, const Vec3& position, double epoch) {
  const auto* anomaly = std::get_if<AnomalyExtension>(&model.extension);
  if (!anomaly)
    throw variant_error("metric", "model carries no anomalous-acceleration extension");
  if (model.sources.empty())
    throw domain_error("metric", "anomaly needs a primary source");
  Vec3 rel = position - model.sources.front().position_at(epoch);
  double r = rel.norm();
  if (r < coincidence_threshold)
    throw singularity_error("metric", "field point coincides with the primary source");
  if (r < anomaly->onset_radius) return Vec3::Zero();
  return -anomaly->magnitude * rel / r;
}

PpnExtension effective_ppn(const MetricModel& model) {
  if (const auto* ppn = std::get_if<PpnExtension>(&model.extension)) return *ppn;
  return PpnExtension{};
}

Vec3 newtonian_acceleration(const MetricModel& model, const Vec3& position, double epoch) {
  Vec3 a = Vec3::Zero();
  for (const auto& src : model.sources) {
    Vec3 rel = position - src.position_at(epoch);
    double r = source_distance(src, position, epoch);
    a -= src.gm / (r * r * r) * rel;
  }
  return a;
}

}  // namespace clocksim::metric
