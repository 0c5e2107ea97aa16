// clocksim: mission simulation and estimation driver.
//
// Subcommands: propagate, observe, adev, schedule, estimate, sensitivity.
// Every run writes a manifest.json (command, config hash, seed, versions)
// next to its data files; outputs contain no timestamps so a rerun with the
// same config and seed is byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clocksim/config.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/dynamics.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/metric.hpp"
#include "clocksim/missions.hpp"
#include "clocksim/noise.hpp"
#include "clocksim/observables.hpp"
#include "clocksim/schedule.hpp"
#include "clocksim/science.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using clocksim::domain_error;
namespace cfg = clocksim::config;
namespace constants = clocksim::constants;
namespace dynamics = clocksim::dynamics;
namespace missions = clocksim::missions;
namespace noise = clocksim::noise;
namespace observables = clocksim::observables;
namespace schedule = clocksim::schedule;
namespace science = clocksim::science;

struct CommonArgs {
  std::string config_path;
  std::string mission;  // used when no config file is given
  std::vector<std::string> overrides;
  std::string out_dir;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "mission config file (JSON)");
  sub->add_option("--mission", args.mission, "mission preset when no --config is given")
      ->check(CLI::IsMember({"aces", "sagas"}));
  sub->add_option("--set", args.overrides,
                  "dotted-path override, e.g. clocks.pharao.white_fm=1e-13");
  sub->add_option("--out", args.out_dir, "output directory (default $CLOCKSIM_OUT or .)");
}

// Three-layer precedence: baseline defaults, then the config file, then
// --set overrides.
cfg::MissionConfig resolve_config(const CommonArgs& args) {
  json overlay = json::object();
  std::string mission = args.mission;
  if (!args.config_path.empty()) {
    overlay = cfg::load_json(args.config_path);
    if (overlay.contains("mission")) {
      if (!overlay["mission"].is_string())
        throw domain_error("config", "config.mission must be a string");
      mission = overlay["mission"].get<std::string>();
    }
  }
  if (mission.empty())
    throw domain_error("config", "no mission selected: pass --config or --mission");
  json merged = cfg::merge(cfg::default_config(mission), overlay);
  for (const auto& assignment : args.overrides) cfg::apply_override(merged, assignment);
  return cfg::make_mission_config(merged);
}

fs::path resolve_out_dir(const CommonArgs& args) {
  std::string dir = args.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CLOCKSIM_OUT")) dir = env;
  }
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& dir, const cfg::MissionConfig& mission_cfg,
                    const std::string& command, std::optional<uint64_t> seed) {
  cfg::write_text((dir / "manifest.json").string(),
                  cfg::manifest(mission_cfg.merged, command, seed).dump(2) + "\n");
}

std::vector<double> state_row(double t, const clocksim::StateVector& s) {
  return {t,            s.position.x(), s.position.y(), s.position.z(),
          s.velocity.x(), s.velocity.y(), s.velocity.z()};
}

// ---------------------------------------------------------------- propagate

struct PropagateArgs {
  CommonArgs common;
  double span = 0.0;  // 0 = mission default
  double step = 0.0;
};

void run_propagate(const PropagateArgs& args) {
  const cfg::MissionConfig mc = resolve_config(args.common);
  const fs::path out = resolve_out_dir(args.common);

  std::vector<std::vector<double>> rows;
  if (mc.mission == "aces") {
    const double period = dynamics::orbital_period(mc.aces.iss_orbit);
    const double span = args.span > 0.0 ? args.span : 2.0 * period;
    const double step = args.step > 0.0 ? args.step : 60.0;
    const clocksim::Trajectory iss =
        dynamics::kepler_trajectory("iss", mc.aces.iss_orbit, 0.0, span);
    for (double t = 0.0; t <= span + 0.5 * step; t += step) {
      const double tc = std::min(t, span);
      rows.push_back(state_row(tc, iss.at(tc)));
    }
  } else {
    const dynamics::EscapeSolution sol = dynamics::solve_escape(mc.sagas.profile);
    const double span = args.span > 0.0
                            ? std::min(args.span, sol.trajectory.t_end())
                            : sol.trajectory.t_end();
    const double step = args.step > 0.0 ? args.step : 10.0 * constants::day;
    for (double t = 0.0; t <= span + 0.5 * step; t += step) {
      const double tc = std::min(t, span);
      rows.push_back(state_row(tc, sol.trajectory.at(tc)));
    }
    json summary = {
        {"transfer_duration_s", sol.transfer_duration},
        {"coast_duration_s", sol.coast_duration},
        {"v_infinity_ms", sol.v_infinity},
        {"plane_inclination_rad", sol.plane_inclination},
    };
    cfg::write_text((out / "escape.json").string(), summary.dump(2) + "\n");
  }
  cfg::write_csv_numeric((out / "trajectory.csv").string(),
                         {"t_s", "x_m", "y_m", "z_m", "vx_ms", "vy_ms", "vz_ms"}, rows);
  write_manifest(out, mc, "propagate", std::nullopt);
}

// ------------------------------------------------------------------ observe

struct ObserveArgs {
  CommonArgs common;
  std::string mode = "shift";
  std::string combination = "one_way";
  uint64_t seed = 0;
  double cadence = 0.0;
  double span = 0.0;
};

observables::Combination parse_combination(const std::string& name) {
  if (name == "one_way") return observables::Combination::one_way;
  if (name == "two_way_satellite") return observables::Combination::two_way_satellite;
  if (name == "two_way_ground") return observables::Combination::two_way_ground;
  if (name == "common_view") return observables::Combination::common_view;
  throw domain_error("config", "unknown combination '" + name + "'");
}

// Fractional-frequency shift series between the mission's reference (ground)
// and target (space) clocks.
void observe_shift(const cfg::MissionConfig& mc, const fs::path& out, double cadence,
                   double span) {
  std::vector<std::vector<double>> rows;
  if (mc.mission == "aces") {
    const double period = dynamics::orbital_period(mc.aces.iss_orbit);
    const double t_end = span > 0.0 ? span : period;
    const double dt = cadence > 0.0 ? cadence : 30.0;
    const clocksim::metric::MetricModel metric = missions::aces_metric();
    const clocksim::Trajectory iss =
        dynamics::kepler_trajectory("iss", mc.aces.iss_orbit, 0.0, t_end);
    const dynamics::GroundStation& station = mc.aces.stations.front();
    for (double t = 0.0; t <= t_end + 0.5 * dt; t += dt) {
      const double tc = std::min(t, t_end);
      const auto shift = observables::fractional_frequency_shift(
          metric, dynamics::ground_station_state(station, tc), iss.at(tc));
      rows.push_back({tc, shift.gravitational, shift.velocity, shift.total});
    }
  } else {
    const missions::SagasGeometry geo = missions::sagas_geometry(mc.sagas);
    const double t_end = span > 0.0 ? span : mc.sagas.nominal_span;
    const double dt = cadence > 0.0 ? cadence : mc.sagas.session_interval;
    for (double t = dt; t <= t_end + 0.5 * dt; t += dt) {
      const double tc = std::min(t, t_end);
      const auto shift = observables::fractional_frequency_shift(
          geo.sun, geo.earth.at(tc), geo.escape.trajectory.at(tc));
      rows.push_back({tc, shift.gravitational, shift.velocity, shift.total});
    }
  }
  cfg::write_csv_numeric((out / "shift.csv").string(),
                         {"t_s", "gravitational", "velocity", "total"}, rows);
}

// Noisy Doppler observable over the first ground pass (first common-view
// window for the common_view combination). Link noise enters after the
// clock combination.
void observe_doppler(const cfg::MissionConfig& mc, const fs::path& out,
                     const std::string& combination_name, uint64_t seed, double cadence) {
  if (mc.mission != "aces")
    throw domain_error("config", "observe --mode doppler runs on the aces mission");
  const missions::AcesMission& m = mc.aces;
  const observables::Combination combination = parse_combination(combination_name);
  const double dt = cadence > 0.0 ? cadence : 10.0;

  const clocksim::metric::MetricModel metric = missions::aces_metric();
  const double scan = 2.0 * constants::day;
  const clocksim::Trajectory iss = dynamics::kepler_trajectory("iss", m.iss_orbit, 0.0, scan);
  const clocksim::Trajectory ground_a =
      dynamics::ground_station_trajectory(m.stations.at(0), 0.0, scan);
  const clocksim::Trajectory ground_b =
      dynamics::ground_station_trajectory(m.stations.at(1), 0.0, scan);

  const auto passes_a =
      schedule::visibility_passes(iss, m.stations.at(0), m.min_elevation, 0.0, scan);
  if (passes_a.empty()) throw domain_error("config", "no visibility pass in the scan window");
  double t0 = passes_a.front().start;
  double t1 = passes_a.front().end;
  if (combination == observables::Combination::common_view) {
    const auto passes_b =
        schedule::visibility_passes(iss, m.stations.at(1), m.min_elevation, 0.0, scan);
    const auto windows = schedule::common_view_windows(passes_a, passes_b);
    if (windows.empty())
      throw domain_error("config", "no common-view window in the scan window");
    t0 = windows.front().start;
    t1 = windows.front().end;
  }

  // Clock/link noise series covering the pass plus light-time margins.
  const double tau0 = 1.0;
  const double t_noise = std::max(0.0, t0 - 10.0);
  const size_t n = static_cast<size_t>((t1 - t_noise) / tau0) + 20;
  noise::FrequencySeries space = noise::synthesize_clock_noise(m.pharao, n, tau0, seed);
  noise::FrequencySeries ga = noise::synthesize_clock_noise(m.ground_clock, n, tau0, seed + 1);
  noise::FrequencySeries gb = noise::synthesize_clock_noise(m.ground_clock, n, tau0, seed + 2);
  noise::FrequencySeries link = noise::synthesize_link_noise(m.mwl, n, tau0, seed + 3);
  space.t_start = ga.t_start = gb.t_start = link.t_start = t_noise;

  observables::LinkGeometry geometry;
  geometry.space = &iss;
  geometry.ground = &ground_a;
  geometry.ground_b = &ground_b;
  geometry.model = &metric;
  observables::LinkNoiseSeries series;
  series.space = &space;
  series.ground = &ga;
  series.ground_b = &gb;

  std::vector<std::vector<double>> rows;
  for (double t = t0; t <= t1; t += dt) {
    const double y = observables::doppler_observable(geometry, combination, t, series) +
                     link.value_at(t);
    rows.push_back({t, y});
  }
  cfg::write_csv_numeric((out / "doppler.csv").string(), {"t_s", "fractional_frequency"},
                         rows);
}

void run_observe(const ObserveArgs& args) {
  const cfg::MissionConfig mc = resolve_config(args.common);
  const fs::path out = resolve_out_dir(args.common);
  if (args.mode == "shift") {
    observe_shift(mc, out, args.cadence, args.span);
  } else {
    observe_doppler(mc, out, args.combination, args.seed, args.cadence);
  }
  write_manifest(out, mc, "observe", args.seed);
}

// --------------------------------------------------------------------- adev

struct AdevArgs {
  CommonArgs common;
  std::string clock;
  std::string link;
  std::string measure = "adev";
  uint64_t seed = 0;
  size_t n = 0;
  double tau0 = 1.0;
};

// tau grid 1-2-5 per decade from tau0 up to a quarter of the span.
std::vector<double> tau_grid(double tau0, size_t n) {
  std::vector<double> taus;
  const double tau_max = tau0 * static_cast<double>(n) / 4.0;
  for (double decade = tau0; decade <= tau_max; decade *= 10.0) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double tau = m * decade;
      if (tau <= tau_max) taus.push_back(tau);
    }
  }
  return taus;
}

void run_adev(const AdevArgs& args) {
  if (args.clock.empty() == args.link.empty())
    throw domain_error("config", "pass exactly one of --clock or --link");
  if (args.n < 16) throw domain_error("config", "--n must be at least 16 samples");

  // Models come from the resolved config when one is given, else from the
  // built-in baselines of both missions.
  std::optional<cfg::MissionConfig> mc;
  missions::AcesMission aces = missions::aces_baseline();
  missions::SagasMission sagas = missions::sagas_baseline();
  if (!args.common.config_path.empty() || !args.common.mission.empty() ||
      !args.common.overrides.empty()) {
    mc = resolve_config(args.common);
    if (mc->mission == "aces") aces = mc->aces;
    if (mc->mission == "sagas") sagas = mc->sagas;
  }
  const fs::path out = resolve_out_dir(args.common);

  const std::vector<double> taus = tau_grid(args.tau0, args.n);
  if (taus.empty()) throw domain_error("config", "no usable tau below a quarter of the span");

  std::vector<std::vector<double>> rows;
  if (!args.clock.empty()) {
    const noise::ClockModel* model = nullptr;
    for (const noise::ClockModel* candidate :
         {&aces.pharao, &aces.shm, &aces.ground_clock, &sagas.space_clock,
          &sagas.ground_clock}) {
      if (candidate->label == args.clock) model = candidate;
    }
    if (!model) throw domain_error("config", "unknown clock '" + args.clock + "'");
    if (args.measure != "adev")
      throw domain_error("config", "--measure tdev applies to links only");
    const noise::FrequencySeries series =
        noise::synthesize_clock_noise(*model, args.n, args.tau0, args.seed);
    const std::vector<double> measured = noise::allan_deviation(series, taus);
    for (size_t i = 0; i < taus.size(); ++i)
      rows.push_back({taus[i], measured[i], noise::clock_adev_model(*model, taus[i])});
  } else {
    const noise::LinkNoiseModel* model = nullptr;
    for (const noise::LinkNoiseModel* candidate : {&aces.mwl, &sagas.link}) {
      if (candidate->label == args.link) model = candidate;
    }
    if (!model) throw domain_error("config", "unknown link '" + args.link + "'");
    const noise::FrequencySeries series =
        noise::synthesize_link_noise(*model, args.n, args.tau0, args.seed);
    if (args.measure == "adev") {
      const std::vector<double> measured = noise::allan_deviation(series, taus);
      const double wfm = noise::link_white_fm_coefficient(*model);
      for (size_t i = 0; i < taus.size(); ++i) {
        // white-PM part has adev = turbulence / tau by construction
        rows.push_back({taus[i], measured[i],
                        std::hypot(wfm / std::sqrt(taus[i]), model->turbulence / taus[i])});
      }
    } else {
      const std::vector<double> measured = noise::time_deviation(series, taus);
      for (size_t i = 0; i < taus.size(); ++i)
        rows.push_back({taus[i], measured[i], noise::link_tdev_model(*model, taus[i])});
    }
  }

  const char* value_name = args.measure == "adev" ? "adev" : "tdev_s";
  cfg::write_csv_numeric((out / "adev.csv").string(), {"tau_s", value_name, "model"}, rows);
  if (mc) {
    write_manifest(out, *mc, "adev", args.seed);
  } else {
    json merged = {{"clock", args.clock}, {"link", args.link}, {"n", args.n},
                   {"tau0", args.tau0}};
    cfg::write_text((out / "manifest.json").string(),
                    cfg::manifest(merged, "adev", args.seed).dump(2) + "\n");
  }
}

// ----------------------------------------------------------------- schedule

struct ScheduleArgs {
  CommonArgs common;
  double span = constants::day;
};

void run_schedule(const ScheduleArgs& args) {
  const cfg::MissionConfig mc = resolve_config(args.common);
  if (mc.mission != "aces")
    throw domain_error("config", "schedule runs on the aces mission");
  const missions::AcesMission& m = mc.aces;
  const fs::path out = resolve_out_dir(args.common);

  const clocksim::Trajectory iss =
      dynamics::kepler_trajectory("iss", m.iss_orbit, 0.0, args.span);
  std::vector<std::vector<schedule::Pass>> passes;
  std::vector<std::vector<std::string>> pass_rows;
  for (const auto& station : m.stations) {
    passes.push_back(
        schedule::visibility_passes(iss, station, m.min_elevation, 0.0, args.span));
    for (const auto& p : passes.back()) {
      pass_rows.push_back({p.station, cfg::format_double(p.start),
                           cfg::format_double(p.end),
                           cfg::format_double(p.max_elevation)});
    }
  }
  cfg::write_csv((out / "passes.csv").string(),
                 {"station", "start_s", "end_s", "max_elevation_rad"}, pass_rows);

  std::vector<std::vector<std::string>> window_rows;
  for (size_t a = 0; a < passes.size(); ++a) {
    for (size_t b = a + 1; b < passes.size(); ++b) {
      for (const auto& w : schedule::common_view_windows(passes[a], passes[b])) {
        const double duration = w.end - w.start;
        const double resolution = schedule::comparison_uncertainty(
            schedule::ComparisonMode::common_view, duration, m.mwl);
        window_rows.push_back({w.station_a, w.station_b, cfg::format_double(w.start),
                               cfg::format_double(w.end), cfg::format_double(duration),
                               cfg::format_double(resolution)});
      }
    }
  }
  cfg::write_csv((out / "windows.csv").string(),
                 {"station_a", "station_b", "start_s", "end_s", "duration_s",
                  "resolution_s"},
                 window_rows);
  write_manifest(out, mc, "schedule", std::nullopt);
}

// ----------------------------------------------------------------- estimate

struct EstimateArgs {
  CommonArgs common;
  std::string test;
  uint64_t seed = 0;
  size_t mc_runs = 0;
  bool zero_noise = false;
  double drift_years = 1.0;
};

science::CampaignInjections effective_injections(const cfg::MissionConfig& mc,
                                                 bool zero_noise) {
  science::CampaignInjections inject =
      mc.mission == "aces" ? mc.aces.injections : mc.sagas.injections;
  if (zero_noise) inject.noise_scale = 0.0;
  return inject;
}

void run_estimate(const EstimateArgs& args) {
  const cfg::MissionConfig mc = resolve_config(args.common);
  const fs::path out = resolve_out_dir(args.common);
  const science::CampaignInjections inject = effective_injections(mc, args.zero_noise);

  // Build the design once; each seeded run re-synthesizes measurements only.
  std::function<science::EstimationResult(uint64_t)> run;

  if (args.test == "redshift" || args.test == "lorentz" || args.test == "lorentz-cmb" ||
      args.test == "alpha") {
    science::ComparisonCampaign campaign;
    if (mc.mission == "aces") {
      campaign = missions::aces_campaign(mc.aces);
    } else {
      campaign = missions::sagas_campaign(mc.sagas, missions::sagas_geometry(mc.sagas));
    }
    const std::string test = args.test;
    run = [campaign, inject, test](uint64_t seed) {
      science::ComparisonCampaign c = campaign;
      science::simulate_measurements(c, inject, seed);
      if (test == "redshift") return science::redshift_test(c);
      if (test == "lorentz") return science::lorentz_test(c, science::LorentzFrame::none);
      if (test == "lorentz-cmb")
        return science::lorentz_test(c, science::LorentzFrame::cmb);
      return science::alpha_variation(c);
    };
  } else if (args.test == "alpha-drift") {
    if (mc.mission != "aces")
      throw domain_error("config", "alpha-drift runs on the aces mission");
    science::DriftCampaign campaign = missions::drift_campaign(mc.aces, args.drift_years);
    const double drift = mc.aces.injections.k_alpha;  // injected drift per year
    const double scale = inject.noise_scale;
    run = [campaign, drift, scale](uint64_t seed) {
      science::DriftCampaign c = campaign;
      if (scale == 0.0) {
        for (auto& s : c.sigma) s = 0.0;
      }
      science::simulate_drift_measurements(c, drift, seed);
      return science::alpha_drift(c);
    };
  } else if (args.test == "gamma") {
    if (mc.mission != "sagas")
      throw domain_error("config", "gamma runs on the sagas mission");
    science::ConjunctionDesign design =
        missions::conjunction_design(mc.sagas, missions::sagas_geometry(mc.sagas));
    design.noise_scale = inject.noise_scale;
    run = [design](uint64_t seed) { return science::ppn_gamma_conjunction(design, seed); };
  } else if (args.test == "anomaly") {
    if (mc.mission != "sagas")
      throw domain_error("config", "anomaly runs on the sagas mission");
    const missions::SagasMission& m = mc.sagas;
    science::AnomalyDesign design = missions::anomaly_design(
        m, missions::sagas_geometry(m), m.anomaly_magnitude, m.anomaly_onset,
        m.anomaly_t_start, m.anomaly_span, m.anomaly_bins);
    design.noise_scale = inject.noise_scale;
    run = [design](uint64_t seed) { return science::anomaly_mapping(design, seed); };
  } else if (args.test == "kbo") {
    if (mc.mission != "sagas")
      throw domain_error("config", "kbo runs on the sagas mission");
    const missions::SagasMission& m = mc.sagas;
    const science::KboDetectability kbo = science::kbo_detectability(
        m.kbo_gm, m.kbo_distance, m.ground_session_floor,
        m.accelerometer.bias_uncertainty);
    json result = {
        {"test", "kbo"},
        {"crossover_radius_m", kbo.crossover_radius},
        {"acceleration_signal_ms2", kbo.acceleration_signal},
        {"potential_signal", kbo.potential_signal},
        {"rel_sigma_acceleration", kbo.rel_sigma_acceleration},
        {"rel_sigma_potential", kbo.rel_sigma_potential},
        {"rel_sigma", kbo.rel_sigma},
        {"preferred_channel", kbo.preferred_channel},
    };
    cfg::write_text((out / "kbo.json").string(), result.dump(2) + "\n");
    write_manifest(out, mc, "estimate kbo", args.seed);
    return;
  } else {
    throw domain_error("config", "unknown test '" + args.test + "'");
  }

  const science::EstimationResult result = run(args.seed);
  cfg::write_text((out / "result.json").string(),
                  cfg::result_to_json(result).dump(2) + "\n");
  if (args.mc_runs > 0) {
    const science::MonteCarloSummary summary =
        science::run_monte_carlo(run, args.mc_runs, args.seed);
    cfg::write_text((out / "mc.json").string(),
                    cfg::mc_summary_to_json(summary).dump(2) + "\n");
  }
  write_manifest(out, mc, "estimate " + args.test, args.seed);
}

// -------------------------------------------------------------- sensitivity

struct SensitivityArgs {
  CommonArgs common;
  size_t points = 200;
};

void run_sensitivity(const SensitivityArgs& args) {
  const cfg::MissionConfig mc = resolve_config(args.common);
  if (mc.mission != "sagas")
    throw domain_error("config", "sensitivity runs on the sagas mission");
  const missions::SagasMission& m = mc.sagas;
  const fs::path out = resolve_out_dir(args.common);

  const science::GwCurve curve = science::gw_sensitivity(
      m.space_clock.white_fm, m.accelerometer.white_noise, m.gw_f_low, m.gw_f_high,
      args.points, m.gw_template_duration);

  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < curve.frequency.size(); ++i)
    rows.push_back({curve.frequency[i], curve.strain_asd[i], curve.template_limit[i]});
  cfg::write_csv_numeric((out / "gw.csv").string(),
                         {"f_Hz", "strain_per_sqrtHz", "template_limit"}, rows);
  json summary = {
      {"floor_asd", curve.floor_asd},
      {"corner_frequency_hz", curve.corner_frequency},
      {"template_floor", curve.template_floor},
  };
  cfg::write_text((out / "gw.json").string(), summary.dump(2) + "\n");
  write_manifest(out, mc, "sensitivity", std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clock-comparison mission simulator and estimator"};
  app.require_subcommand(1);

  PropagateArgs propagate_args;
  CLI::App* propagate = app.add_subcommand("propagate", "write a trajectory sample table");
  add_common(propagate, propagate_args.common);
  propagate->add_option("--span", propagate_args.span, "span in seconds");
  propagate->add_option("--step", propagate_args.step, "sample step in seconds");

  ObserveArgs observe_args;
  CLI::App* observe = app.add_subcommand("observe", "write frequency-shift or Doppler series");
  add_common(observe, observe_args.common);
  observe->add_option("--mode", observe_args.mode, "shift or doppler")
      ->check(CLI::IsMember({"shift", "doppler"}));
  observe->add_option("--combination", observe_args.combination,
                      "doppler combination")
      ->check(CLI::IsMember(
          {"one_way", "two_way_satellite", "two_way_ground", "common_view"}));
  observe->add_option("--seed", observe_args.seed, "noise seed")->required();
  observe->add_option("--cadence", observe_args.cadence, "sample cadence in seconds");
  observe->add_option("--span", observe_args.span, "span in seconds (shift mode)");

  AdevArgs adev_args;
  CLI::App* adev = app.add_subcommand("adev", "synthesize noise and measure its stability");
  add_common(adev, adev_args.common);
  adev->add_option("--clock", adev_args.clock, "clock label (pharao, shm, ground, ...)");
  adev->add_option("--link", adev_args.link, "link label (mwl, optical_link)");
  adev->add_option("--measure", adev_args.measure, "adev or tdev")
      ->check(CLI::IsMember({"adev", "tdev"}));
  adev->add_option("--n", adev_args.n, "number of samples")->required();
  adev->add_option("--tau0", adev_args.tau0, "sample interval in seconds");
  adev->add_option("--seed", adev_args.seed, "noise seed")->required();

  ScheduleArgs schedule_args;
  CLI::App* sched = app.add_subcommand("schedule", "write visibility passes and windows");
  add_common(sched, schedule_args.common);
  sched->add_option("--span", schedule_args.span, "scan span in seconds");

  EstimateArgs estimate_args;
  CLI::App* estimate = app.add_subcommand("estimate", "run a physics estimator");
  add_common(estimate, estimate_args.common);
  estimate
      ->add_option("--test", estimate_args.test,
                   "redshift, lorentz, lorentz-cmb, alpha, alpha-drift, gamma, anomaly, "
                   "or kbo")
      ->required();
  estimate->add_option("--seed", estimate_args.seed, "noise seed")->required();
  estimate->add_option("--mc", estimate_args.mc_runs, "Monte Carlo replicas");
  estimate->add_flag("--zero-noise", estimate_args.zero_noise,
                     "disable stochastic noise and bias draws");
  estimate->add_option("--drift-years", estimate_args.drift_years,
                       "alpha-drift campaign span in years");

  SensitivityArgs sensitivity_args;
  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "write the gravitational-wave sensitivity curve");
  add_common(sensitivity, sensitivity_args.common);
  sensitivity->add_option("--points", sensitivity_args.points, "curve sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (propagate->parsed()) run_propagate(propagate_args);
    if (observe->parsed()) run_observe(observe_args);
    if (adev->parsed()) run_adev(adev_args);
    if (sched->parsed()) run_schedule(schedule_args);
    if (estimate->parsed()) run_estimate(estimate_args);
    if (sensitivity->parsed()) run_sensitivity(sensitivity_args);
  } catch (const clocksim::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.module() == "config" ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
