// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief Scenario files: a YAML document with `schema_version: 1`.
 *
 * Unknown keys are rejected so typos surface as errors with a line number.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffqm/dynamics.hpp"
#include "cliffqm/grid.hpp"
#include "cliffqm/scenario.hpp"

namespace cliffqm::harness {

inline constexpr int kSchemaVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Particle { schrodinger, pauli };

struct PotentialSpec {
  enum class Kind { none, harmonic, table };
  Kind kind = Kind::none;
  double omega = 1.0;
  /// One value per grid point in storage order; only valid at the base level.
  std::vector<double> table;
};

/// A named residual or agreement check. The tolerance is factor * C * scale
/// with scale h^2, or h^2 + dt^2 for checks that take time derivatives.
struct CheckSpec {
  double c = 1.0;
  double factor = 5.0;
  bool enabled = true;
};

struct TrajectorySpec {
  std::vector<Vec3> seeds;
  /// Integration step; defaults to the evolution step.
  std::optional<double> dt;
};

struct ConvergenceSpec {
  std::size_t levels = 0;
  double slope_lo = 1.8;
  double slope_hi = 2.2;
  std::vector<std::string> checks;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  Particle particle = Particle::schrodinger;
  double mass = 1.0;
  std::optional<ScalarState> scalar_state;
  std::optional<PauliState> pauli_state;
  Grid grid = Grid::line(-1, 1, Grid::kMinPoints, Boundary::clamped);
  PotentialSpec potential;
  Scheme scheme = Scheme::crank_nicolson;
  double dt = 1e-3;
  std::size_t steps = 100;
  std::size_t save_every = 1;
  double abort_drift = 1e-4;
  std::size_t boundary_layer = 2;
  TrajectorySpec trajectories;
  std::map<std::string, CheckSpec> checks;
  ConvergenceSpec convergence;
};

/// Check names in report order.
[[nodiscard]] const std::vector<std::string>& check_names();
/// True when the check's scale includes dt^2.
[[nodiscard]] bool check_is_temporal(const std::string& name);
/// Checks that need the Pauli algebra.
[[nodiscard]] bool check_is_pauli_only(const std::string& name);

[[nodiscard]] ScenarioConfig parse_config(const std::string& text, const std::string& source = "<string>");
[[nodiscard]] ScenarioConfig load_config(const std::filesystem::path& path);

/// Name and description only, for listings.
struct ScenarioSummary {
  std::string name;
  std::string description;
  std::filesystem::path path;
};
[[nodiscard]] std::vector<ScenarioSummary> list_scenarios(const std::filesystem::path& dir);

}  // namespace cliffqm::harness
