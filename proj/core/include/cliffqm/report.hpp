// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Residual statistics and the pass/fail run report.
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cliffqm/grid.hpp"

namespace cliffqm {

/// Statistics over finite points; NaN points count as masked.
struct ResidualStats {
  double max_abs = 0.0;
  /// sqrt(sum r^2 dV).
  double l2 = 0.0;
  double masked_fraction = 0.0;
  double h = 0.0;
  double dt = 0.0;
  std::size_t points = 0;
};

/// Points within `boundary_layer` cells of a clamped edge are skipped.
[[nodiscard]] ResidualStats residual_stats(const GridField<double>& r, double dt, std::size_t boundary_layer = 0);
/// Uses the largest component for max_abs and |r| for l2.
[[nodiscard]] ResidualStats residual_stats(const GridField<Vec3>& r, double dt, std::size_t boundary_layer = 0);
/// Stats of a - b.
[[nodiscard]] ResidualStats difference_stats(const GridField<double>& a, const GridField<double>& b, double dt,
                                             std::size_t boundary_layer = 0);
[[nodiscard]] ResidualStats difference_stats(const GridField<Vec3>& a, const GridField<Vec3>& b, double dt,
                                             std::size_t boundary_layer = 0);

/// log2(e_i / e_{i+1}) for successive halvings.
[[nodiscard]] std::vector<double> convergence_slopes(const std::vector<double>& errors);
/// log(e_i / e_{i+1}) / log(h_i / h_{i+1}) for arbitrary refinement ratios.
[[nodiscard]] std::vector<double> convergence_slopes(const std::vector<double>& errors,
                                                     const std::vector<double>& spacings);

class RunReport {
 public:
  explicit RunReport(std::string scenario);

  void add_residual(const std::string& name, const ResidualStats& stats, double tolerance);
  void add_agreement(const std::string& name, const ResidualStats& stats, double tolerance);
  void add_slopes(const std::string& name, const std::vector<double>& errors, const std::vector<double>& spacings,
                  double lo, double hi);
  void add_flag(const std::string& name, bool passed, const std::string& detail);
  void add_value(const std::string& name, double value);

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] const std::string& scenario() const noexcept { return scenario_; }
  /// Failed check names in insertion order.
  [[nodiscard]] std::vector<std::string> failures() const;
  /// Deterministic JSON (sorted keys, round-trip doubles, no timestamps).
  [[nodiscard]] std::string to_json() const;

 private:
  struct Entry {
    std::string kind;
    bool passed = true;
    std::map<std::string, double> numbers;
    std::vector<double> series;
    std::string detail;
  };
  void insert(const std::string& name, Entry entry);

  std::string scenario_;
  std::vector<std::pair<std::string, Entry>> entries_;
};

}  // namespace cliffqm
