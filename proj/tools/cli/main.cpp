// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "harness.hpp"

namespace fs = std::filesystem;
using namespace cliffqm::harness;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

fs::path scenario_dir() {
  if (const char* env = std::getenv("CLIFFQM_SCENARIO_DIR")) return env;
  return CLIFFQM_DEFAULT_SCENARIO_DIR;
}

fs::path output_root() {
  if (const char* env = std::getenv("CLIFFQM_OUTPUT_ROOT")) return env;
  return "cliffqm-out";
}

// Accepts a path or the name of a bundled scenario.
fs::path resolve(const std::string& arg) {
  const fs::path p(arg);
  if (fs::exists(p)) return p;
  const fs::path bundled = scenario_dir() / (arg + ".cfg");
  if (p.extension().empty() && fs::exists(bundled)) return bundled;
  return p;
}

int cmd_run(const std::string& config, const std::string& out_dir) {
  const ScenarioConfig cfg = load_config(resolve(config));
  const fs::path out = out_dir.empty() ? output_root() / cfg.name : fs::path(out_dir);
  const RunOutcome r = run(cfg, out);
  std::cout << cfg.name << ": " << (r.report.passed() ? "PASS" : "FAIL") << " (" << out.string() << ")\n";
  for (const std::string& f : r.report.failures()) std::cout << "  failed: " << f << "\n";
  return r.report.passed() ? kPass : kFail;
}

int cmd_sweep(const std::string& config, std::size_t levels, const std::string& out_dir) {
  const ScenarioConfig cfg = load_config(resolve(config));
  const SweepTable table = sweep(cfg, levels);
  const fs::path out = out_dir.empty() ? output_root() / cfg.name : fs::path(out_dir);
  fs::create_directories(out);
  std::ofstream(out / "sweep.json") << table.to_json();
  std::cout << table.to_text();
  return table.passed() ? kPass : kFail;
}

int cmd_list(bool json) {
  const std::vector<ScenarioSummary> list = list_scenarios(scenario_dir());
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const ScenarioSummary& s : list) j.push_back({{"name", s.name}, {"description", s.description}});
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  for (const ScenarioSummary& s : list) std::cout << s.name << "  " << s.description << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-algebra quantum mechanics scenarios"};
  app.require_subcommand(1);

  std::string config, out_dir;
  std::size_t levels = 3;
  bool json = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Evolve a scenario and write fields, trajectories and a report");
  run_cmd->add_option("config", config, "Scenario file or bundled scenario name")->required();
  run_cmd->add_option("--out", out_dir, "Output directory");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Refinement sweep with convergence slopes");
  sweep_cmd->add_option("config", config, "Scenario file or bundled scenario name")->required();
  sweep_cmd->add_option("--levels", levels, "Number of refinement levels")->check(CLI::Range(3, 8));
  sweep_cmd->add_option("--out", out_dir, "Output directory");

  CLI::App* list_cmd = app.add_subcommand("list", "List bundled scenarios");
  list_cmd->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(config, out_dir);
    if (*sweep_cmd) return cmd_sweep(config, levels, out_dir);
    return cmd_list(json);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
