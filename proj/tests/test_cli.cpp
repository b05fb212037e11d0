#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cibench/cli.hpp"
#include "cibench/dataset.hpp"
#include "cibench/error.hpp"

using namespace cibench;
namespace fs = std::filesystem;

namespace {

const std::string kPanel = std::string(CIBENCH_FIXTURE_DIR) + "/fixture_panel.csv";
const std::string kSurvey = std::string(CIBENCH_FIXTURE_DIR) + "/fixture_survey.csv";
const std::string kInventory = std::string(CIBENCH_FIXTURE_DIR) + "/fixture_inventory.csv";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(Command c, std::string input = {}) {
  RunConfig config;
  config.command = c;
  config.input = std::move(input);
  return config;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "cibench_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("command names round trip") {
  for (auto c : {Command::validate, Command::correlate, Command::fit, Command::relimp, Command::benchmark_fit,
                 Command::benchmark_size, Command::position, Command::project, Command::report}) {
    CHECK(parse_command(command_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_command("frobnicate"), Error);
}

TEST_CASE("benchmark-size with a preset") {
  auto config = command(Command::benchmark_size);
  config.basis = "herd";
  config.values = {1000};
  config.format = Format::csv;
  auto r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("1000,11470,2.94,8.66") != std::string::npos);

  config.values.clear();
  r = invoke(config);
  CHECK(r.out.find("1900,21793,5.59,16.45") != std::string::npos);
}

TEST_CASE("validate on an empty file exits 2 with a JSON error") {
  auto r = invoke(command(Command::validate, std::string(CIBENCH_TEST_DATA) + "/empty.csv"));
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["error"] == "EmptyDataset");
  CHECK(j["command"] == "validate");
  CHECK(j["exit_code"] == 2);
}

TEST_CASE("exit codes by error class") {
  CHECK(invoke(command(Command::validate, "/nonexistent/panel.csv")).code == 4);
  auto fit = command(Command::fit, kPanel);
  fit.scope = "Nowhere";
  CHECK(invoke(fit).code == 2);
  auto size = command(Command::benchmark_size);
  size.basis = "herd";
  size.values = {-5};
  CHECK(invoke(size).code == 2);
}

TEST_CASE("fit, correlate, relimp and report run on the fixture panel") {
  for (auto c : {Command::validate, Command::correlate, Command::fit, Command::relimp, Command::report}) {
    auto config = command(c, kPanel);
    config.format = Format::json;
    auto r = invoke(config);
    CHECK_MESSAGE(r.code == 0, r.err);
    CHECK_NOTHROW(parse_report_json(r.out));
  }
  auto all = command(Command::fit, kPanel);
  all.scope = "all";
  CHECK(invoke(all).code == 0);
}

TEST_CASE("survey commands run on the fixture survey") {
  auto bf = command(Command::benchmark_fit, kSurvey);
  bf.inventory = kInventory;
  auto r = invoke(bf);
  CHECK_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("Benchmark") != std::string::npos);

  auto pos = command(Command::position, kSurvey);
  pos.inventory = kInventory;
  pos.basis = "pub";
  pos.preset = "survey-2025";
  r = invoke(pos);
  CHECK_MESSAGE(r.code == 0, r.err);
}

TEST_CASE("project with an explicit rate") {
  auto config = command(Command::project);
  config.values = {1000};
  config.rate = 0.41;
  config.horizon = 2;
  config.format = Format::csv;
  auto r = invoke(config);
  CHECK_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("2027") != std::string::npos);
  config.values.clear();
  CHECK(invoke(config).code == 2);
}

TEST_CASE("output files are written whole or not at all") {
  const auto dir = scratch_dir();
  const auto target = dir / "fit.md";
  fs::remove(target);

  auto config = command(Command::fit, kPanel);
  config.output = target.string();
  CHECK(invoke(config).code == 0);
  REQUIRE(fs::exists(target));
  const auto good = read_file(target);
  CHECK_FALSE(good.empty());

  auto failing = command(Command::fit, std::string(CIBENCH_TEST_DATA) + "/empty.csv");
  failing.output = target.string();
  CHECK(invoke(failing).code == 2);
  CHECK(read_file(target) == good);
  CHECK_FALSE(fs::exists(dir / "fit.md.tmp"));

  const auto fresh = dir / "never.md";
  fs::remove(fresh);
  failing.output = fresh.string();
  invoke(failing);
  CHECK_FALSE(fs::exists(fresh));
}

TEST_CASE("repeated runs are byte identical") {
  for (auto c : {Command::fit, Command::report, Command::benchmark_size}) {
    auto config = command(c, c == Command::benchmark_size ? "" : kPanel);
    config.basis = "herd";
    config.format = Format::json;
    const auto a = invoke(config);
    const auto b = invoke(config);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("error record shape") {
  auto j = nlohmann::json::parse(error_record("fit", "SingularDesign", "x \"quoted\"", 3));
  CHECK(j["message"] == "x \"quoted\"");
  CHECK(j["exit_code"] == 3);
}
