#include <doctest.h>

#include <clocale>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rotflow/cli/commands.hpp"
#include "rotflow/cli/config.hpp"
#include "rotflow/cli/csv.hpp"

using namespace rotflow::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rotflow_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::string line;
  std::getline(in, line);
  return line;
}

nlohmann::json core_keys() {
  return {{"geometry.rho", 1.0}, {"geometry.R", 2.0},   {"geometry.r0", 1.5},
          {"geometry.T", 1.0},   {"params.lambda", 0.1}, {"params.epsilon", 0.5}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("flat and nested configs resolve to the same keys") {
    const nlohmann::json nested = {{"geometry", {{"rho", 1.0}, {"R", 2.0}, {"r0", 1.5}, {"T", 1.0}}},
                                   {"params", {{"lambda", 0.2}, {"epsilon", 0.0}}},
                                   {"sweep", {{"nu", {1e-2, 1e-3, 1e-4}}}}};
    const RunConfig cfg = apply_config({}, flatten_config(nested), true);
    CHECK(cfg.params.lambda == 0.2);
    CHECK(cfg.nu_list.size() == 3);
  }

  TEST_CASE("missing, unknown and mistyped keys are configuration errors") {
    nlohmann::json flat = core_keys();
    flat.erase("geometry.R");
    CHECK_THROWS_AS(apply_config({}, flat, true), ConfigError);
    flat = core_keys();
    flat["geometry.radius"] = 3.0;
    CHECK_THROWS_AS(apply_config({}, flat, true), ConfigError);
    flat = core_keys();
    flat["params.lambda"] = "fast";
    CHECK_THROWS_AS(apply_config({}, flat, true), ConfigError);
    flat = core_keys();
    flat["grid.n_r"] = -3;
    CHECK_THROWS_AS(apply_config({}, flat, true), ConfigError);
  }

  TEST_CASE("command-line overrides") {
    CHECK(parse_override("params.lambda", "0.125").get<double>() == 0.125);
    const auto list = parse_override("sweep.nu", "1e-2,1e-3,1e-4");
    REQUIRE(list.size() == 3);
    CHECK(list[2].get<double>() == 1e-4);
    CHECK(parse_override("grid.n_r", "40").get<std::uint64_t>() == 40);
    CHECK_THROWS_AS(parse_override("grid.n_r", "4.5"), ConfigError);
    CHECK_THROWS_AS(parse_override("params.lambda", "0,1"), ConfigError);
    CHECK_THROWS_AS(parse_override("nope", "1"), ConfigError);
  }

  TEST_CASE("number formatting ignores the locale") {
    std::setlocale(LC_ALL, "de_DE.UTF-8");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(2.356194490192345) == "2.356194490192345");
    std::setlocale(LC_ALL, "C");
  }

  TEST_CASE("validate: default passes, lambda = 0.3 cites 0.25") {
    RunConfig cfg;
    cfg.output_dir = scratch("validate");
    CHECK(run_command("validate", cfg).exit_code == kExitPass);
    cfg.params.lambda = 0.3;
    const CommandResult bad = run_command("validate", cfg);
    CHECK(bad.exit_code == kExitCheckFailed);
    CHECK(bad.report["validation"]["violations"][0]["limit"].get<double>() == doctest::Approx(0.25));
    cfg.params = {0.1, 1.05};
    const CommandResult warn = run_command("validate", cfg);
    CHECK(warn.exit_code == kExitPass);
    CHECK(warn.report["validation"]["warnings"].size() == 1);
  }

  TEST_CASE("malformed geometry exits with 2") {
    RunConfig cfg;
    cfg.output_dir = scratch("geometry");
    cfg.geometry.rho = 3.0;
    CHECK(run_command("validate", cfg).exit_code == kExitUsage);
    CHECK(run_command("nonsense", RunConfig{}).exit_code == kExitUsage);
  }

  TEST_CASE("subsolution csv contract") {
    RunConfig cfg;
    cfg.output_dir = scratch("subsolution");
    const CommandResult res = run_command("subsolution", cfg);
    CHECK(res.exit_code == kExitPass);
    const fs::path csv = cfg.output_dir / "subsolution.csv";
    CHECK(first_line(csv) == "r,theta,t,f,alpha,beta,gamma,qbar,vbar_x,vbar_y,u11,u12,egen,ebar,in_U");
    CHECK(res.report["rows"].get<std::size_t>() == 50 * 32 * 5);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    std::size_t t0_rows = 0;
    while (std::getline(in, line)) {
      std::stringstream ss(line);
      std::string cell;
      std::vector<std::string> cells;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      REQUIRE(cells.size() == 15);
      CHECK(std::stod(cells[12]) <= std::stod(cells[13]) + 1e-13);
      if (cells[2] == "0") {
        ++t0_rows;
        CHECK(cells[14] == "false");
      }
    }
    CHECK(t0_rows == 50 * 32);
    CHECK(read_all(csv).find('\r') == std::string::npos);
  }

  TEST_CASE("energy table") {
    RunConfig cfg;
    cfg.output_dir = scratch("energy");
    cfg.epsilon_list = {0.0};
    const CommandResult res = run_command("energy", cfg);
    CHECK(res.exit_code == kExitPass);
    std::ifstream in(cfg.output_dir / "energy.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,energy_total,E0,deficit");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      const auto c3 = line.find(',', c2 + 1);
      CHECK(std::stod(line.substr(c2 + 1, c3 - c2 - 1)) == doctest::Approx(2.3561945).epsilon(1e-7));
    }
    CHECK(rows == 9);
    CHECK(res.report["runs"][0]["strict_decreases"].get<int>() == 8);
  }

  TEST_CASE("viscosity driver") {
    RunConfig cfg;
    cfg.output_dir = scratch("viscosity");
    cfg.viscosity_intervals = 400;
    cfg.viscosity_dt = 4e-3;
    const CommandResult res = run_command("viscosity", cfg);
    CHECK(res.exit_code == kExitPass);
    CHECK(res.report["checks"]["distance_strictly_decreasing"]["passed"].get<bool>());
  }

  TEST_CASE("boundary driver is deterministic and carries provenance") {
    RunConfig cfg;
    const fs::path dir_a = scratch("boundary_a"), dir_b = scratch("boundary_b");
    cfg.output_dir = dir_a;
    const CommandResult a = run_command("boundary", cfg);
    CHECK(a.exit_code == kExitPass);
    cfg.output_dir = dir_b;
    const CommandResult b = run_command("boundary", cfg);
    CHECK(b.exit_code == kExitPass);
    CHECK(read_all(dir_a / "boundary.csv") == read_all(dir_b / "boundary.csv"));
    CHECK(a.report["provenance"]["version"] == tool_version());
    CHECK(a.report["provenance"]["config"]["boundary.holder_alpha"].get<double>() == 0.5);
    CHECK(a.report["provenance"]["seed"] == cfg.seed);
    for (int k = 0; k < 4; ++k) CHECK(a.report["slopes"][k].get<double>() >= a.report["predicted_exponents"][k].get<double>() - 0.15);
  }

  TEST_CASE("module errors propagate with a nonzero exit") {
    RunConfig cfg;
    cfg.output_dir = scratch("errors");
    cfg.nu_list = {1e-3, 1e-2, 1e-4};
    CHECK(run_command("viscosity", cfg).exit_code == kExitCheckFailed);
    cfg = RunConfig{};
    cfg.output_dir = scratch("errors");
    cfg.eps_cutoff_list = {0.04, 0.02};
    CHECK(run_command("boundary", cfg).exit_code == kExitCheckFailed);
  }

#ifdef ROTFLOW_CLI_BINARY
  TEST_CASE("executable exit codes") {
    const fs::path dir = scratch("exe");
    fs::create_directories(dir);
    const std::string exe = ROTFLOW_CLI_BINARY;
    nlohmann::json cfg = core_keys();
    cfg.erase("geometry.R");
    std::ofstream(dir / "missing.json") << cfg.dump();
    std::ofstream(dir / "full.json") << core_keys().dump();
    const std::string quiet = " > " + (dir / "log.txt").string() + " 2>&1";
    auto run = [&](const std::string& args) {
      const int status = std::system((exe + " " + args + quiet).c_str());
      return WEXITSTATUS(status);
    };
    CHECK(run("validate --out " + dir.string()) == 0);
    CHECK(run("validate --config " + (dir / "full.json").string() + " --out " + dir.string()) == 0);
    CHECK(run("validate --config " + (dir / "missing.json").string()) == 2);
    CHECK(run("validate --params.lambda 0.3 --out " + dir.string()) == 1);
    CHECK(run("validate --params.lambda abc") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("") == 2);
  }
#endif
}
