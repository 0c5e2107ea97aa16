#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "clocksim/config.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

using namespace clocksim;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string cli = CLOCKSIM_CLI_PATH;
const std::string source_dir = CLOCKSIM_SOURCE_DIR;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "clocksim_config_tests";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("merge overlays objects recursively and replaces scalars") {
  const json base = {{"a", {{"b", 1}, {"c", 2}}}, {"d", 3}, {"list", {1, 2, 3}}};
  const json overlay = {{"a", {{"b", 9}}}, {"e", 5}, {"list", {7}}};
  const json merged = config::merge(base, overlay);
  CHECK(merged["a"]["b"] == 9);
  CHECK(merged["a"]["c"] == 2);
  CHECK(merged["d"] == 3);
  CHECK(merged["e"] == 5);
  CHECK(merged["list"] == json({7}));  // arrays replace, never splice
}

TEST_CASE("dotted overrides parse values as json with a string fallback") {
  json tree = {{"clocks", {{"pharao", {{"white_fm", 1e-13}}}}}};
  config::apply_override(tree, "clocks.pharao.white_fm=2e-13");
  CHECK(tree["clocks"]["pharao"]["white_fm"] == 2e-13);
  config::apply_override(tree, "clocks.pharao.label=cold cesium");
  CHECK(tree["clocks"]["pharao"]["label"] == "cold cesium");
  config::apply_override(tree, "flag=true");
  CHECK(tree["flag"] == true);
  config::apply_override(tree, "mission=aces");
  CHECK(tree["mission"] == "aces");

  CHECK_THROWS_AS(config::apply_override(tree, "no_equals"), domain_error);
  CHECK_THROWS_AS(config::apply_override(tree, "=5"), domain_error);
  CHECK_THROWS_AS(config::apply_override(tree, "clocks..x=1"), domain_error);
  // paths may not tunnel through scalars
  CHECK_THROWS_AS(config::apply_override(tree, "flag.deep=1"), domain_error);
}

TEST_CASE("default trees resolve back into the baseline missions") {
  const auto aces = config::make_mission_config(config::default_config("aces"));
  CHECK(aces.mission == "aces");
  CHECK(aces.aces.stations.size() == 5);
  CHECK(aces.aces.stations.front().label == "paris");
  CHECK(aces.aces.pharao.white_fm == 1e-13);
  CHECK(aces.aces.shm.flicker_fm == 7e-16);
  CHECK(aces.aces.mwl.tdev_points.size() == 3);
  CHECK(aces.aces.mwl.tdev_points[1].second == 7e-12);
  CHECK(aces.aces.campaign_span == 180.0 * constants::day);

  const auto sagas = config::make_mission_config(config::default_config("sagas"));
  CHECK(sagas.mission == "sagas");
  CHECK(sagas.sagas.space_clock.white_fm == 1e-14);
  CHECK(sagas.sagas.link.turbulence == 3e-13);
  CHECK(sagas.sagas.kuiper.inner_radius == 30.0 * constants::au);
  CHECK(sagas.sagas.profile.waypoint_end_radius == 53.0 * constants::au);
  CHECK(sagas.sagas.k_sensitivity == 0.43);

  CHECK_THROWS_AS(config::default_config("viking"), domain_error);

  json untagged = config::default_config("aces");
  untagged.erase("mission");
  CHECK_THROWS_AS(config::make_mission_config(untagged), domain_error);

  json bad_type = config::default_config("aces");
  bad_type["clocks"]["pharao"]["white_fm"] = "fast";
  CHECK_THROWS_AS(config::make_mission_config(bad_type), domain_error);
  try {
    config::make_mission_config(bad_type);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("white_fm") != std::string::npos);
  }
}

TEST_CASE("preset files reproduce the built-in defaults byte for byte") {
  for (const std::string mission : {"aces", "sagas"}) {
    const json preset = config::load_json(source_dir + "/presets/" + mission + ".preset");
    const json defaults = config::default_config(mission);
    CHECK(preset == defaults);
    CHECK(config::config_hash(preset) == config::config_hash(defaults));
  }
}

TEST_CASE("config hash is stable and value-sensitive") {
  const json a = config::default_config("aces");
  CHECK(config::config_hash(a) == config::config_hash(config::default_config("aces")));
  json b = a;
  config::apply_override(b, "clocks.pharao.white_fm=2e-13");
  CHECK(config::config_hash(a) != config::config_hash(b));
}

TEST_CASE("manifest carries versions and seed but never a timestamp") {
  const json cfg = config::default_config("sagas");
  const json m = config::manifest(cfg, "estimate", 42);
  CHECK(m["command"] == "estimate");
  CHECK(m["seed"] == 42);
  CHECK(m["config_hash"] == config::config_hash(cfg));
  CHECK(m["versions"]["clocksim"] == config::version);
  CHECK(m.size() == 4);
  const json bare = config::manifest(cfg, "propagate", std::nullopt);
  CHECK(!bare.contains("seed"));
  CHECK(bare.size() == 3);
}

TEST_CASE("estimation results serialize to the documented schema") {
  science::EstimationResult r;
  r.test = "redshift";
  r.names = {"epsilon"};
  r.parameters = Eigen::VectorXd::Constant(1, 2.5e-10);
  r.sigmas = Eigen::VectorXd::Constant(1, 1e-9);
  r.covariance = Eigen::MatrixXd::Constant(1, 1, 1e-18);
  r.residual_rms = 3e-10;
  r.n_obs = 548;
  r.extras["bias_alias"] = 1.1e8;
  const json j = config::result_to_json(r);
  CHECK(j["parameters"]["epsilon"] == 2.5e-10);
  CHECK(j["sigmas"]["epsilon"] == 1e-9);
  CHECK(j["covariance"][0][0] == 1e-18);
  CHECK(j["n_obs"] == 548);
  CHECK(j["extras"]["bias_alias"] == 1.1e8);

  const json schema = config::load_json(source_dir + "/docs/result.schema.json");
  CHECK_NOTHROW(config::validate_json(j, schema));

  json broken = j;
  broken.erase("covariance");
  CHECK_THROWS_AS(config::validate_json(broken, schema), domain_error);
  try {
    config::validate_json(broken, schema);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("covariance") != std::string::npos);
  }
  json mistyped = j;
  mistyped["n_obs"] = "many";
  CHECK_THROWS_AS(config::validate_json(mistyped, schema), domain_error);
}

TEST_CASE("doubles survive a csv round trip at full precision") {
  for (double v : {0.1, -2.5e17, 3.141592653589793, 1e-300, 4.1022e-11, 0.0}) {
    CHECK(std::strtod(config::format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("json loading reports the offending file") {
  CHECK_THROWS_AS(config::load_json("/nonexistent/nowhere.json"), domain_error);
  const fs::path dir = scratch_dir();
  const fs::path bad = dir / "broken.json";
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(config::load_json(bad.string()), domain_error);
}

TEST_CASE("cli separates usage, config, and model failures by exit code") {
  CHECK(run_cli("estimate --test redshift --mission aces") != 0);  // --seed required
  CHECK(run_cli("definitely-not-a-command") != 0);
  // config-level rejection
  CHECK(run_cli("estimate --test alpha-drift --mission sagas --seed 1 --out /tmp/clocksim_cfg_rc") == 1);
  CHECK(run_cli("observe --mode doppler --mission sagas --seed 1 --out /tmp/clocksim_cfg_rc") == 1);
  // model-level rejection: mid waypoint unreachable for the escape solve
  CHECK(run_cli("propagate --mission sagas --set profile.waypoint_mid_epoch=1000 "
                "--out /tmp/clocksim_cfg_rc") == 2);
}

TEST_CASE("cli reruns are byte-identical and honor override precedence") {
  const fs::path dir = scratch_dir();
  const fs::path a = dir / "a";
  const fs::path b = dir / "b";
  REQUIRE(run_cli("adev --clock pharao --n 4096 --tau0 1 --seed 9 --out " + a.string()) == 0);
  REQUIRE(run_cli("adev --clock pharao --n 4096 --tau0 1 --seed 9 --out " + b.string()) == 0);
  CHECK(slurp(a / "adev.csv") == slurp(b / "adev.csv"));
  CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));

  // defaults < config file < --set, visible through the model column
  const fs::path cfg = dir / "override.json";
  std::ofstream(cfg) << R"({"mission": "aces", "clocks": {"pharao": {"white_fm": 2e-13}}})";
  const fs::path file_dir = dir / "file";
  const fs::path flag_dir = dir / "flag";
  REQUIRE(run_cli("adev --clock pharao --n 4096 --tau0 1 --seed 9 --config " + cfg.string() +
                  " --out " + file_dir.string()) == 0);
  REQUIRE(run_cli("adev --clock pharao --n 4096 --tau0 1 --seed 9 --config " + cfg.string() +
                  " --set clocks.pharao.white_fm=4e-13 --out " + flag_dir.string()) == 0);

  auto first_model = [](const fs::path& csv) {
    std::ifstream in(csv);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    const auto last_comma = row.rfind(',');
    return std::strtod(row.substr(last_comma + 1).c_str(), nullptr);
  };
  CHECK(first_model(a / "adev.csv") == doctest::Approx(1e-13).epsilon(1e-9));
  CHECK(first_model(file_dir / "adev.csv") == doctest::Approx(2e-13).epsilon(1e-9));
  CHECK(first_model(flag_dir / "adev.csv") == doctest::Approx(4e-13).epsilon(1e-9));
}

}  // TEST_SUITE
