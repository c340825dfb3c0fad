#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "ringmap/serialize.hpp"
#include "support/schema_check.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string cli = RINGMAP_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ringmap_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
  const int status = std::system((cli + " " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json load(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  return doc;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string circle_json(double cx, double cy, double radius) {
  json doc;
  doc["modes"] = json::array({json::array({0, cx, cy}), json::array({1, radius, 0.0})});
  return doc.dump();
}

} // namespace

TEST_CASE("annulus-exact emits the closed-form map with meta") {
  TempDir tmp;
  const auto out = tmp.path / "map.json";
  REQUIRE(run("annulus-exact --r 0.5 --R 0.666666666666666667 --out " + out.string() +
              " > /dev/null") == 0);
  const json doc = load(out);
  CHECK(doc["rho"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["meta"]["c"].get<double>() == doctest::Approx(-8.0 / 81.0).epsilon(1e-9));
  CHECK(doc["meta"]["energy"].get<double>() ==
        doctest::Approx(34.0 * std::numbers::pi / 27.0).epsilon(1e-9));
  CHECK(doc["meta"]["diffeomorphic_minimizer_exists"].get<bool>());

  // a1 ~ 8/9 in the serialized band.
  double a1 = 0.0;
  for (const auto& entry : doc["a"])
    if (entry[0].get<int>() == 1) a1 = entry[1].get<double>();
  CHECK(a1 == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("modulus subcommand on concentric circles") {
  TempDir tmp;
  write(tmp.path / "outer.json", circle_json(0.0, 0.0, 1.0));
  write(tmp.path / "inner.json", circle_json(0.0, 0.0, 0.5));
  const auto report_path = tmp.path / "modulus.json";
  REQUIRE(run("modulus --outer " + (tmp.path / "outer.json").string() + " --inner " +
              (tmp.path / "inner.json").string() + " --out " + report_path.string()) == 0);
  const json doc = load(report_path);
  CHECK(doc["command"] == "modulus");
  CHECK(doc["result"]["modulus"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_FALSE(doc["result"]["flagged"].get<bool>());
}

TEST_CASE("hopf and verify reports on the exact map") {
  TempDir tmp;
  const auto map_path = tmp.path / "map.json";
  REQUIRE(run("annulus-exact --r 0.5 --R 0.666666666666666667 --out " + map_path.string() +
              " > /dev/null") == 0);

  const auto hopf_path = tmp.path / "hopf.json";
  REQUIRE(run("hopf --map " + map_path.string() + " --report " + hopf_path.string()) == 0);
  const json hopf = load(hopf_path);
  CHECK(hopf["result"]["c_fit"].get<double>() == doctest::Approx(-8.0 / 81.0).epsilon(1e-6));
  CHECK(hopf["result"]["sign_class"] == "negative");
  CHECK(hopf["result"]["consistent"].get<bool>());
  CHECK(hopf["result"]["mod_target"].get<double>() == doctest::Approx(1.5).epsilon(1e-4));

  const auto verify_path = tmp.path / "verify.json";
  REQUIRE(run("verify --map " + map_path.string() + " --alpha 0.5 --report " +
              verify_path.string()) == 0);
  const json verify = load(verify_path);
  CHECK(verify["result"]["regularity"]["length_area_slack_min"].get<double>() >= -1e-6);
  CHECK(verify["result"]["regularity"]["predicted_exponent"].get<double>() ==
        doctest::Approx(0.5));
  CHECK(verify["result"]["hopf"]["kkprime_slack_min"].get<double>() >= -1e-8);
  CHECK(verify["result"]["hopf"]["energy_bound_slack"].get<double>() >= -1e-8);
}

TEST_CASE("verify on the identity map classifies the conformal case") {
  TempDir tmp;
  const auto map_path = tmp.path / "map.json";
  REQUIRE(run("annulus-exact --r 0.5 --R 0.5 --out " + map_path.string() + " > /dev/null") == 0);
  const auto report_path = tmp.path / "verify.json";
  REQUIRE(run("verify --map " + map_path.string() + " --report " + report_path.string()) == 0);
  const json doc = load(report_path);
  CHECK(doc["result"]["hopf"]["sign_class"] == "zero");
  CHECK(std::abs(doc["result"]["hopf"]["c_fit"].get<double>()) < 1e-6);
  CHECK(doc["result"]["hopf"]["consistent"].get<bool>());
  CHECK(doc["result"]["hopf"]["energy_bound_slack"].get<double>() >= -1e-8);
  CHECK(doc["result"]["hopf"]["energy_bound_slack"].get<double>() < 1e-4);
}

TEST_CASE("lift subcommand writes an OBJ mesh") {
  TempDir tmp;
  const auto map_path = tmp.path / "map.json";
  REQUIRE(run("annulus-exact --r 0.5 --R 0.666666666666666667 --out " + map_path.string() +
              " > /dev/null") == 0);
  const auto obj_path = tmp.path / "surface.obj";
  REQUIRE(run("lift --map " + map_path.string() + " --res 16x32 --out " + obj_path.string() +
              " > /dev/null") == 0);

  std::ifstream in(obj_path);
  REQUIRE(in.good());
  int v_count = 0, f_count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v_count;
    if (line.rfind("f ", 0) == 0) ++f_count;
  }
  CHECK(v_count == 16 * 32);
  CHECK(f_count == 2 * 15 * 32);
}

TEST_CASE("minimize subcommand is deterministic (timings excluded)") {
  TempDir tmp;
  json problem;
  problem["rho"] = 0.5;
  problem["outer"] = json::parse(circle_json(0.0, 0.0, 1.0));
  problem["inner"] = json::parse(circle_json(0.0, 0.0, 2.0 / 3.0));
  problem["num_modes"] = 8;
  problem["reparam_degree"] = 2;
  problem["max_iter"] = 40;
  problem["label"] = "bench-negative-c";
  write(tmp.path / "problem.json", problem.dump());

  const auto out1 = tmp.path / "result1.json";
  const auto out2 = tmp.path / "result2.json";
  REQUIRE(run("minimize --config " + (tmp.path / "problem.json").string() + " --out " +
              out1.string()) == 0);
  REQUIRE(run("minimize --config " + (tmp.path / "problem.json").string() + " --out " +
              out2.string()) == 0);

  json first = load(out1), second = load(out2);
  CHECK(first["result"]["energy"].get<double>() ==
        doctest::Approx(34.0 * std::numbers::pi / 27.0).epsilon(1e-6));
  CHECK(first["result"]["label"] == "bench-negative-c");
  CHECK(first["result"]["converged"].get<bool>());
  first.erase("timings");
  second.erase("timings");
  CHECK(first.dump() == second.dump());
}

TEST_CASE("minimize --swap exchanges the boundary assignment at equal energy") {
  TempDir tmp;
  json problem;
  problem["rho"] = 0.5;
  problem["outer"] = json::parse(circle_json(0.0, 0.0, 1.0));
  problem["inner"] = json::parse(circle_json(0.0, 0.0, 2.0 / 3.0));
  problem["num_modes"] = 8;
  problem["reparam_degree"] = 2;
  problem["max_iter"] = 40;
  write(tmp.path / "problem.json", problem.dump());

  const auto out = tmp.path / "swapped.json";
  REQUIRE(run("minimize --config " + (tmp.path / "problem.json").string() + " --swap --out " +
              out.string()) == 0);
  const json doc = load(out);
  CHECK(doc["result"]["energy"].get<double>() ==
        doctest::Approx(34.0 * std::numbers::pi / 27.0).epsilon(1e-6));

  // The swapped map sends the unit circle to the inner target boundary.
  const auto map = ringmap::map_from_json(doc["result"]["map"].dump());
  CHECK(std::abs(map.evaluate(ringmap::Complex(1.0, 0.0))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(std::abs(map.evaluate(ringmap::Complex(0.5, 0.0))) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("every emitted document validates against the shipped schemas") {
  TempDir tmp;
  schema_check::Validator validator{RINGMAP_SCHEMA_DIR};

  const auto map_path = tmp.path / "map.json";
  REQUIRE(run("annulus-exact --r 0.5 --R 0.666666666666666667 --out " + map_path.string() +
              " > /dev/null") == 0);
  CHECK(validator.validate_against("map.schema.json", load(map_path)) == "");

  write(tmp.path / "outer.json", circle_json(0.0, 0.0, 1.0));
  write(tmp.path / "inner.json", circle_json(0.0, 0.0, 0.5));
  CHECK(validator.validate_against("curve.schema.json", load(tmp.path / "outer.json")) == "");

  const auto mod_path = tmp.path / "mod.json";
  REQUIRE(run("modulus --outer " + (tmp.path / "outer.json").string() + " --inner " +
              (tmp.path / "inner.json").string() + " --out " + mod_path.string()) == 0);
  json mod = load(mod_path);
  CHECK(validator.validate_against("envelope.schema.json", mod) == "");
  CHECK(validator.validate_against("modulus_result.schema.json", mod["result"]) == "");

  const auto hopf_path = tmp.path / "hopf.json";
  REQUIRE(run("hopf --map " + map_path.string() + " --report " + hopf_path.string()) == 0);
  json hopf = load(hopf_path);
  CHECK(validator.validate_against("envelope.schema.json", hopf) == "");
  CHECK(validator.validate_against("hopf_report.schema.json", hopf["result"]) == "");

  const auto verify_path = tmp.path / "verify.json";
  REQUIRE(run("verify --map " + map_path.string() + " --report " + verify_path.string()) == 0);
  json verify = load(verify_path);
  CHECK(validator.validate_against("envelope.schema.json", verify) == "");
  CHECK(validator.validate_against("verify_report.schema.json", verify["result"]) == "");

  json problem;
  problem["rho"] = 0.5;
  problem["outer"] = json::parse(circle_json(0.0, 0.0, 1.0));
  problem["inner"] = json::parse(circle_json(0.0, 0.0, 2.0 / 3.0));
  problem["num_modes"] = 8;
  problem["reparam_degree"] = 2;
  problem["max_iter"] = 30;
  write(tmp.path / "problem.json", problem.dump());
  CHECK(validator.validate_against("problem.schema.json", problem) == "");

  const auto result_path = tmp.path / "result.json";
  REQUIRE(run("minimize --config " + (tmp.path / "problem.json").string() + " --out " +
              result_path.string()) == 0);
  json result = load(result_path);
  CHECK(validator.validate_against("envelope.schema.json", result) == "");
  CHECK(validator.validate_against("minimize_result.schema.json", result["result"]) == "");
  CHECK(validator.validate_against("problem.schema.json", result["config"]) == "");
}

TEST_CASE("errors surface as machine-readable JSON with stable exit codes") {
  TempDir tmp;
  write(tmp.path / "bad.json", "{this is not json");
  const auto err_path = tmp.path / "err.txt";
  const int status = run("minimize --config " + (tmp.path / "bad.json").string() + " 2> " +
                         err_path.string());
  CHECK(status == 6); // E_CONFIG
  const json err = load(err_path);
  CHECK(err["error"]["code"] == "E_CONFIG");

  const int missing = run("hopf --map " + (tmp.path / "absent.json").string() + " 2> " +
                          err_path.string());
  CHECK(missing == 5); // E_IO
}
