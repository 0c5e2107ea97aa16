#include "clocksim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim::config {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw domain_error("config", msg); }

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key + " is missing");
  return *it;
}

double num(const json& j, const std::string& key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_number()) fail(path + "." + key + " must be a number");
  return v.get<double>();
}

size_t uint_of(const json& j, const std::string& key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_number_unsigned()) fail(path + "." + key + " must be a non-negative integer");
  return v.get<size_t>();
}

std::string str(const json& j, const std::string& key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_string()) fail(path + "." + key + " must be a string");
  return v.get<std::string>();
}

json clock_to_json(const noise::ClockModel& m) {
  return {{"label", m.label},          {"white_fm", m.white_fm},
          {"flicker_fm", m.flicker_fm}, {"random_walk_fm", m.random_walk_fm},
          {"drift_rate", m.drift_rate}, {"accuracy", m.accuracy}};
}

noise::ClockModel clock_from_json(const json& j, const std::string& path) {
  noise::ClockModel m;
  m.label = str(j, "label", path);
  m.white_fm = num(j, "white_fm", path);
  m.flicker_fm = num(j, "flicker_fm", path);
  m.random_walk_fm = num(j, "random_walk_fm", path);
  m.drift_rate = num(j, "drift_rate", path);
  m.accuracy = num(j, "accuracy", path);
  return m;
}

json link_to_json(const noise::LinkNoiseModel& m) {
  json pts = json::array();
  for (const auto& [tau, tdev] : m.tdev_points) pts.push_back({tau, tdev});
  return {{"label", m.label}, {"tdev_points", pts}, {"turbulence", m.turbulence}};
}

noise::LinkNoiseModel link_from_json(const json& j, const std::string& path) {
  noise::LinkNoiseModel m;
  m.label = str(j, "label", path);
  m.turbulence = num(j, "turbulence", path);
  const json& pts = member(j, "tdev_points", path);
  if (!pts.is_array()) fail(path + ".tdev_points must be an array");
  for (size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      fail(path + ".tdev_points[" + std::to_string(i) + "] must be [tau, tdev]");
    }
    m.tdev_points.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return m;
}

json injections_to_json(const science::CampaignInjections& inj) {
  return {{"epsilon", inj.epsilon},
          {"lorentz", inj.lorentz},
          {"cmb", inj.cmb},
          {"k_alpha", inj.k_alpha}};
}

science::CampaignInjections injections_from_json(const json& j, const std::string& path) {
  science::CampaignInjections inj;
  inj.epsilon = num(j, "epsilon", path);
  inj.lorentz = num(j, "lorentz", path);
  inj.cmb = num(j, "cmb", path);
  inj.k_alpha = num(j, "k_alpha", path);
  return inj;
}

json aces_to_json(const missions::AcesMission& m) {
  json stations = json::array();
  for (const auto& s : m.stations) {
    stations.push_back({{"label", s.label},
                        {"latitude", s.latitude},
                        {"longitude", s.longitude},
                        {"radius", s.radius}});
  }
  return {
      {"mission", "aces"},
      {"orbit",
       {{"gm", m.iss_orbit.gm},
        {"semi_major_axis", m.iss_orbit.semi_major_axis},
        {"eccentricity", m.iss_orbit.eccentricity},
        {"inclination", m.iss_orbit.inclination},
        {"raan", m.iss_orbit.raan},
        {"arg_periapsis", m.iss_orbit.arg_periapsis},
        {"mean_anomaly", m.iss_orbit.mean_anomaly},
        {"epoch", m.iss_orbit.epoch}}},
      {"stations", stations},
      {"clocks",
       {{"pharao", clock_to_json(m.pharao)},
        {"shm", clock_to_json(m.shm)},
        {"ground", clock_to_json(m.ground_clock)}}},
      {"link", link_to_json(m.mwl)},
      {"campaign",
       {{"span", m.campaign_span}, {"session_duration", m.session_duration}}},
      {"drift",
       {{"sessions_per_year", m.drift_sessions_per_year},
        {"session_sigma", m.drift_session_sigma}}},
      {"min_elevation", m.min_elevation},
      {"injections", injections_to_json(m.injections)},
  };
}

missions::AcesMission aces_from_json(const json& j) {
  missions::AcesMission m = missions::aces_baseline();
  const json& orbit = member(j, "orbit", "config");
  m.iss_orbit.gm = num(orbit, "gm", "config.orbit");
  m.iss_orbit.semi_major_axis = num(orbit, "semi_major_axis", "config.orbit");
  m.iss_orbit.eccentricity = num(orbit, "eccentricity", "config.orbit");
  m.iss_orbit.inclination = num(orbit, "inclination", "config.orbit");
  m.iss_orbit.raan = num(orbit, "raan", "config.orbit");
  m.iss_orbit.arg_periapsis = num(orbit, "arg_periapsis", "config.orbit");
  m.iss_orbit.mean_anomaly = num(orbit, "mean_anomaly", "config.orbit");
  m.iss_orbit.epoch = num(orbit, "epoch", "config.orbit");

  const json& stations = member(j, "stations", "config");
  if (!stations.is_array() || stations.empty()) fail("config.stations must be a non-empty array");
  m.stations.clear();
  for (size_t i = 0; i < stations.size(); ++i) {
    const std::string path = "config.stations[" + std::to_string(i) + "]";
    dynamics::GroundStation s;
    s.label = str(stations[i], "label", path);
    s.latitude = num(stations[i], "latitude", path);
    s.longitude = num(stations[i], "longitude", path);
    s.radius = num(stations[i], "radius", path);
    m.stations.push_back(std::move(s));
  }

  const json& clocks = member(j, "clocks", "config");
  m.pharao = clock_from_json(member(clocks, "pharao", "config.clocks"), "config.clocks.pharao");
  m.shm = clock_from_json(member(clocks, "shm", "config.clocks"), "config.clocks.shm");
  m.ground_clock =
      clock_from_json(member(clocks, "ground", "config.clocks"), "config.clocks.ground");
  m.mwl = link_from_json(member(j, "link", "config"), "config.link");

  const json& campaign = member(j, "campaign", "config");
  m.campaign_span = num(campaign, "span", "config.campaign");
  m.session_duration = num(campaign, "session_duration", "config.campaign");

  const json& drift = member(j, "drift", "config");
  m.drift_sessions_per_year = uint_of(drift, "sessions_per_year", "config.drift");
  m.drift_session_sigma = num(drift, "session_sigma", "config.drift");
  m.min_elevation = num(j, "min_elevation", "config");
  m.injections = injections_from_json(member(j, "injections", "config"), "config.injections");
  return m;
}

json sagas_to_json(const missions::SagasMission& m) {
  return {
      {"mission", "sagas"},
      {"profile",
       {{"gm", m.profile.gm},
        {"depart_radius", m.profile.depart_radius},
        {"flyby_radius", m.profile.flyby_radius},
        {"waypoint_mid_epoch", m.profile.waypoint_mid_epoch},
        {"waypoint_mid_radius", m.profile.waypoint_mid_radius},
        {"waypoint_end_epoch", m.profile.waypoint_end_epoch},
        {"waypoint_end_radius", m.profile.waypoint_end_radius},
        {"escape_latitude", m.profile.escape_latitude}}},
      {"clocks",
       {{"space", clock_to_json(m.space_clock)}, {"ground", clock_to_json(m.ground_clock)}}},
      {"accelerometer",
       {{"label", m.accelerometer.label},
        {"white_noise", m.accelerometer.white_noise},
        {"bias_uncertainty", m.accelerometer.bias_uncertainty}}},
      {"link", link_to_json(m.link)},
      {"ground_session_floor", m.ground_session_floor},
      {"campaign",
       {{"session_interval", m.session_interval},
        {"session_duration", m.session_duration},
        {"nominal_span", m.nominal_span}}},
      {"k_sensitivity", m.k_sensitivity},
      {"cmb_velocity", {m.cmb_velocity.x(), m.cmb_velocity.y(), m.cmb_velocity.z()}},
      {"anomaly",
       {{"magnitude", m.anomaly_magnitude},
        {"onset_radius", m.anomaly_onset},
        {"t_start", m.anomaly_t_start},
        {"span", m.anomaly_span},
        {"n_bins", m.anomaly_bins}}},
      {"kuiper",
       {{"gm", m.kuiper.gm},
        {"inner_radius", m.kuiper.inner_radius},
        {"outer_radius", m.kuiper.outer_radius},
        {"distribution", m.kuiper.distribution == science::BeltDistribution::thin_ring
                             ? "thin_ring"
                             : m.kuiper.distribution == science::BeltDistribution::annulus
                                   ? "annulus"
                                   : "two_ring"},
        {"plane_inclination", m.kuiper.plane_inclination},
        {"probe_distance", m.kuiper_probe_distance}}},
      {"kbo", {{"gm", m.kbo_gm}, {"distance", m.kbo_distance}}},
      {"conjunction",
       {{"cadence", m.conjunction_cadence},
        {"half_span", m.conjunction_half_span},
        {"epoch_hint", m.conjunction_epoch_hint},
        {"injected_gamma", m.conjunction_gamma}}},
      {"gw",
       {{"f_low", m.gw_f_low},
        {"f_high", m.gw_f_high},
        {"template_duration", m.gw_template_duration}}},
      {"injections", injections_to_json(m.injections)},
  };
}

missions::SagasMission sagas_from_json(const json& j) {
  missions::SagasMission m = missions::sagas_baseline();
  const json& p = member(j, "profile", "config");
  m.profile.gm = num(p, "gm", "config.profile");
  m.profile.depart_radius = num(p, "depart_radius", "config.profile");
  m.profile.flyby_radius = num(p, "flyby_radius", "config.profile");
  m.profile.waypoint_mid_epoch = num(p, "waypoint_mid_epoch", "config.profile");
  m.profile.waypoint_mid_radius = num(p, "waypoint_mid_radius", "config.profile");
  m.profile.waypoint_end_epoch = num(p, "waypoint_end_epoch", "config.profile");
  m.profile.waypoint_end_radius = num(p, "waypoint_end_radius", "config.profile");
  m.profile.escape_latitude = num(p, "escape_latitude", "config.profile");

  const json& clocks = member(j, "clocks", "config");
  m.space_clock =
      clock_from_json(member(clocks, "space", "config.clocks"), "config.clocks.space");
  m.ground_clock =
      clock_from_json(member(clocks, "ground", "config.clocks"), "config.clocks.ground");

  const json& acc = member(j, "accelerometer", "config");
  m.accelerometer.label = str(acc, "label", "config.accelerometer");
  m.accelerometer.white_noise = num(acc, "white_noise", "config.accelerometer");
  m.accelerometer.bias_uncertainty = num(acc, "bias_uncertainty", "config.accelerometer");

  m.link = link_from_json(member(j, "link", "config"), "config.link");
  m.ground_session_floor = num(j, "ground_session_floor", "config");

  const json& campaign = member(j, "campaign", "config");
  m.session_interval = num(campaign, "session_interval", "config.campaign");
  m.session_duration = num(campaign, "session_duration", "config.campaign");
  m.nominal_span = num(campaign, "nominal_span", "config.campaign");

  m.k_sensitivity = num(j, "k_sensitivity", "config");

  const json& cmb = member(j, "cmb_velocity", "config");
  if (!cmb.is_array() || cmb.size() != 3) fail("config.cmb_velocity must be [x, y, z]");
  for (size_t i = 0; i < 3; ++i) {
    if (!cmb[i].is_number()) fail("config.cmb_velocity components must be numbers");
    m.cmb_velocity[static_cast<Eigen::Index>(i)] = cmb[i].get<double>();
  }

  const json& anomaly = member(j, "anomaly", "config");
  m.anomaly_magnitude = num(anomaly, "magnitude", "config.anomaly");
  m.anomaly_onset = num(anomaly, "onset_radius", "config.anomaly");
  m.anomaly_t_start = num(anomaly, "t_start", "config.anomaly");
  m.anomaly_span = num(anomaly, "span", "config.anomaly");
  m.anomaly_bins = uint_of(anomaly, "n_bins", "config.anomaly");

  const json& kb = member(j, "kuiper", "config");
  m.kuiper.gm = num(kb, "gm", "config.kuiper");
  m.kuiper.inner_radius = num(kb, "inner_radius", "config.kuiper");
  m.kuiper.outer_radius = num(kb, "outer_radius", "config.kuiper");
  m.kuiper.plane_inclination = num(kb, "plane_inclination", "config.kuiper");
  m.kuiper_probe_distance = num(kb, "probe_distance", "config.kuiper");
  const std::string dist = str(kb, "distribution", "config.kuiper");
  if (dist == "thin_ring") {
    m.kuiper.distribution = science::BeltDistribution::thin_ring;
  } else if (dist == "annulus") {
    m.kuiper.distribution = science::BeltDistribution::annulus;
  } else if (dist == "two_ring") {
    m.kuiper.distribution = science::BeltDistribution::two_ring;
  } else {
    fail("config.kuiper.distribution must be thin_ring, annulus or two_ring");
  }

  const json& kbo = member(j, "kbo", "config");
  m.kbo_gm = num(kbo, "gm", "config.kbo");
  m.kbo_distance = num(kbo, "distance", "config.kbo");

  const json& conj = member(j, "conjunction", "config");
  m.conjunction_cadence = num(conj, "cadence", "config.conjunction");
  m.conjunction_half_span = num(conj, "half_span", "config.conjunction");
  m.conjunction_epoch_hint = num(conj, "epoch_hint", "config.conjunction");
  m.conjunction_gamma = num(conj, "injected_gamma", "config.conjunction");

  const json& gw = member(j, "gw", "config");
  m.gw_f_low = num(gw, "f_low", "config.gw");
  m.gw_f_high = num(gw, "f_high", "config.gw");
  m.gw_template_duration = num(gw, "template_duration", "config.gw");
  m.injections = injections_from_json(member(j, "injections", "config"), "config.injections");
  return m;
}

}  // namespace

json default_config(const std::string& mission) {
  if (mission == "aces") return aces_to_json(missions::aces_baseline());
  if (mission == "sagas") return sagas_to_json(missions::sagas_baseline());
  fail("unknown mission '" + mission + "' (expected aces or sagas)");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail("parse failure in " + path + ": " + e.what());
  }
}

json merge(const json& base, const json& overlay) {
  if (!base.is_object() || !overlay.is_object()) return overlay;
  json out = base;
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    auto existing = out.find(it.key());
    if (existing != out.end()) {
      *existing = merge(*existing, it.value());
    } else {
      out[it.key()] = it.value();
    }
  }
  return out;
}

void apply_override(json& tree, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    fail("override '" + assignment + "' must look like path.to.key=value");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string value_text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(value_text);
  } catch (const json::parse_error&) {
    value = value_text;  // bare strings allowed without quotes
  }

  json* node = &tree;
  std::istringstream keys(path);
  std::string key;
  std::vector<std::string> parts;
  while (std::getline(keys, key, '.')) {
    if (key.empty()) fail("override path '" + path + "' has an empty segment");
    parts.push_back(key);
  }
  if (parts.empty()) fail("override path is empty");
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object()) fail("override path '" + path + "' crosses a non-object");
    node = &(*node)[parts[i]];
  }
  if (!node->is_object()) fail("override path '" + path + "' crosses a non-object");
  (*node)[parts.back()] = value;
}

MissionConfig make_mission_config(const json& merged) {
  MissionConfig cfg;
  cfg.merged = merged;
  cfg.mission = str(merged, "mission", "config");
  if (cfg.mission == "aces") {
    cfg.aces = aces_from_json(merged);
  } else if (cfg.mission == "sagas") {
    cfg.sagas = sagas_from_json(merged);
  } else {
    fail("config.mission must be aces or sagas, got '" + cfg.mission + "'");
  }
  return cfg;
}

uint64_t config_hash(const json& tree) {
  const std::string dump = tree.dump();
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json manifest(const json& cfg, const std::string& command, std::optional<uint64_t> seed) {
  json m = {
      {"command", command},
      {"config_hash", config_hash(cfg)},
      {"versions", {{"clocksim", version}}},
  };
  if (seed) m["seed"] = *seed;
  return m;
}

json result_to_json(const science::EstimationResult& result) {
  json parameters = json::object();
  json sigmas = json::object();
  for (size_t i = 0; i < result.names.size(); ++i) {
    parameters[result.names[i]] = result.parameters(static_cast<Eigen::Index>(i));
    sigmas[result.names[i]] = result.sigmas(static_cast<Eigen::Index>(i));
  }
  json cov = json::array();
  for (Eigen::Index i = 0; i < result.covariance.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < result.covariance.cols(); ++j) {
      row.push_back(result.covariance(i, j));
    }
    cov.push_back(row);
  }
  json extras = json::object();
  for (const auto& [k, v] : result.extras) extras[k] = v;
  return {{"test", result.test},
          {"parameters", parameters},
          {"sigmas", sigmas},
          {"covariance", cov},
          {"residual_rms", result.residual_rms},
          {"n_obs", result.n_obs},
          {"extras", extras}};
}

json mc_summary_to_json(const science::MonteCarloSummary& summary) {
  json names = json::array();
  json mean = json::array();
  json scatter = json::array();
  json reported = json::array();
  for (size_t i = 0; i < summary.names.size(); ++i) {
    names.push_back(summary.names[i]);
    mean.push_back(summary.mean_estimate(static_cast<Eigen::Index>(i)));
    scatter.push_back(summary.scatter(static_cast<Eigen::Index>(i)));
    reported.push_back(summary.mean_reported_sigma(static_cast<Eigen::Index>(i)));
  }
  return {{"names", names},
          {"mean_estimate", mean},
          {"scatter", scatter},
          {"mean_reported_sigma", reported},
          {"n_runs", summary.n_runs}};
}

namespace {

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  fail("schema names unsupported type '" + type + "'");
}

void validate_at(const json& value, const json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
    }
    if (!ok) fail(path + " has wrong type");
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) ok = ok || alt == value;
    if (!ok) fail(path + " not in allowed values");
  }
  if (schema.contains("required")) {
    for (const auto& req : schema["required"]) {
      if (!value.is_object() || !value.contains(req.get<std::string>())) {
        fail(path + "." + req.get<std::string>() + " is required");
      }
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
      if (value.contains(it.key())) {
        validate_at(value[it.key()], it.value(), path + "." + it.key());
      }
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      validate_at(value[i], schema["items"], path + "[" + std::to_string(i) + "]");
    }
  }
}

}  // namespace

void validate_json(const json& value, const json& schema) {
  validate_at(value, schema, "result");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    if (row.size() != header.size()) fail("csv row width mismatch in " + path);
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
  }
  if (!out) fail("write failure on " + path);
}

void write_csv_numeric(const std::string& path, const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<std::string>> text;
  text.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (double v : row) cells.push_back(format_double(v));
    text.push_back(std::move(cells));
  }
  write_csv(path, header, text);
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << content;
  if (!out) fail("write failure on " + path);
}

}  // namespace clocksim::config
