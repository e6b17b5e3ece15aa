#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotflow/cli/config.hpp"

namespace rotflow::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json report;  ///< includes the provenance block
  std::vector<std::filesystem::path> files;
};

const std::vector<std::string>& command_names();

CommandResult cmd_validate(const RunConfig& cfg);
CommandResult cmd_subsolution(const RunConfig& cfg);
CommandResult cmd_energy(const RunConfig& cfg);
CommandResult cmd_burgers(const RunConfig& cfg);
CommandResult cmd_residual(const RunConfig& cfg);
CommandResult cmd_viscosity(const RunConfig& cfg);
CommandResult cmd_boundary(const RunConfig& cfg);

/// Dispatch by name, attach provenance and write <out>/<name>.json.
/// Library errors become exit 1 (check-level) or 2 (configuration-level).
CommandResult run_command(const std::string& name, const RunConfig& cfg);

std::string tool_version();

}  // namespace rotflow::cli
