#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rotflow/cli/commands.hpp"
#include "rotflow/cli/config.hpp"

namespace {

struct Invocation {
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> overrides;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace rotflow::cli;
  CLI::App app{"Verification toolkit for rotational Euler subsolutions on an annulus", "rotflow"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::map<std::string, Invocation> calls;
  for (const auto& name : command_names()) {
    Invocation& inv = calls[name];
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " driver");
    sub->add_option_function<std::string>("--config", [&inv](const std::string& p) { inv.config_path = p; },
                                          "JSON configuration file (flat dotted keys)");
    sub->add_option_function<std::string>("--out", [&inv](const std::string& p) { inv.out_dir = p; },
                                          "output directory");
    sub->add_option_function<std::uint64_t>("--seed", [&inv](std::uint64_t s) { inv.seed = s; },
                                            "seed for randomized samples");
    for (const auto& key : config_keys()) {
      if (key == "seed" || key == "output.dir") continue;
      sub->add_option_function<std::string>("--" + key, [&inv, key](const std::string& v) { inv.overrides[key] = v; },
                                            "override " + key);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const Invocation& inv = calls[name];

  RunConfig cfg;
  try {
    if (inv.config_path) cfg = load_config_file(*inv.config_path);
    nlohmann::json flat = nlohmann::json::object();
    for (const auto& [key, text] : inv.overrides) flat[key] = parse_override(key, text);
    cfg = apply_config(cfg, flat, false);
    if (inv.out_dir) cfg.output_dir = *inv.out_dir;
    if (inv.seed) cfg.seed = *inv.seed;
  } catch (const ConfigError& e) {
    std::cerr << "rotflow " << name << ": " << e.what() << '\n';
    return kExitUsage;
  }

  const CommandResult res = run_command(name, cfg);
  std::cout << res.report.dump(2) << '\n';
  if (res.report.contains("error")) std::cerr << "rotflow " << name << ": " << res.report["error"].get<std::string>() << '\n';
  return res.exit_code;
}
