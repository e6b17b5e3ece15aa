#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotflow/domain.hpp"

namespace rotflow::cli {

/// Malformed or incomplete configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  AnnulusGeometry geometry;
  SubsolutionParams params;

  std::size_t n_r = 50;
  std::size_t n_theta = 32;
  std::size_t n_t = 5;
  int quad_order = 8;

  std::vector<double> epsilon_list{0.0, 0.25, 0.5};
  std::vector<double> nu_list{1e-2, 1e-3, 1e-4};
  std::vector<double> eps_cutoff_list{0.04, 0.02, 0.01, 0.005};

  std::size_t energy_samples = 9;

  std::vector<double> burgers_cells{3200, 6400, 12800, 25600};
  double burgers_time = 0.5;

  std::size_t viscosity_intervals = 1000;
  double viscosity_dt = 1e-3;
  double viscosity_time = 1.0;

  double holder_alpha = 0.5;

  std::size_t residual_points = 200;
  std::vector<double> residual_steps{2e-3, 1e-3, 5e-4};

  std::filesystem::path output_dir = "rotflow_out";
  std::uint64_t seed = 20240607;
};

/// Every recognised flat key, in a stable order.
const std::vector<std::string>& config_keys();

/// Keys a configuration file has to provide.
const std::vector<std::string>& required_keys();

/// Nested objects are flattened to dotted keys; a flat document passes through.
nlohmann::json flatten_config(const nlohmann::json& doc);

/// Apply a flat key/value document on top of `base`. Unknown keys, wrong
/// types and missing required keys (when `require_core`) throw ConfigError.
RunConfig apply_config(RunConfig base, const nlohmann::json& flat, bool require_core);

RunConfig load_config_file(const std::filesystem::path& path);

/// Parse a command-line override value for `key` ("0.1", "1e-2,1e-3", ...).
nlohmann::json parse_override(const std::string& key, const std::string& text);

/// Flat echo of the resolved configuration.
nlohmann::json config_to_json(const RunConfig& cfg);

}  // namespace rotflow::cli
