// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file harness.hpp
 * @brief Scenario runs and refinement sweeps behind the `cliffqm` command.
 */

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffqm/io.hpp"
#include "cliffqm/report.hpp"
#include "cliffqm/trajectories.hpp"
#include "config.hpp"

namespace cliffqm::harness {

/// Level l halves h l times, divides dt by 4^l and keeps the final time.
[[nodiscard]] ScenarioConfig refine(const ScenarioConfig& cfg, std::size_t level);

struct LevelResult {
  double h = 0.0;
  double dt = 0.0;
  double max_norm_drift = 0.0;
  bool aborted = false;
  std::vector<std::string> warnings;
  /// Enabled checks only; empty when the run aborted.
  std::map<std::string, ResidualStats> stats;
  /// Fields at the analysis frame (one step after the final saved frame).
  Grid grid = Grid::line(-1, 1, Grid::kMinPoints, Boundary::clamped);
  std::vector<Column> columns;
  std::optional<TrajectorySet> trajectories;
};

/// Evolves, analyses the last frame and integrates trajectories if requested.
[[nodiscard]] LevelResult run_level(const ScenarioConfig& cfg, bool with_trajectories);

/// Tolerance for a check at a given level.
[[nodiscard]] double tolerance(const ScenarioConfig& cfg, const std::string& check, double h, double dt);

struct SweepRow {
  std::string check;
  std::vector<double> errors;
  std::vector<double> spacings;
  std::vector<double> slopes;
  bool passed = true;
};

struct SweepTable {
  std::string scenario;
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  std::vector<SweepRow> rows;
  bool aborted = false;

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;
};

/// levels >= 3. Sweeps the convergence checks, or every enabled check if none are listed.
[[nodiscard]] SweepTable sweep(const ScenarioConfig& cfg, std::size_t levels);

/// Builds the report for the base level plus any configured convergence sweep.
[[nodiscard]] RunReport build_report(const ScenarioConfig& cfg, const LevelResult& base);

struct RunOutcome {
  RunReport report;
  std::filesystem::path directory;
};

/// Writes fields.csv, trajectories.csv and report.json into `out`.
[[nodiscard]] RunOutcome run(const ScenarioConfig& cfg, const std::filesystem::path& out);

}  // namespace cliffqm::harness
