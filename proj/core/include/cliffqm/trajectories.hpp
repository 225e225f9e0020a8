// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file trajectories.hpp
 * @brief Bohm trajectories integrated through sampled velocity fields.
 *
 * Classic RK4 with multilinear interpolation in space and linear
 * interpolation between frames. Paths that leave a clamped grid or step into
 * a masked (NaN) cell stop there and are flagged.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cliffqm/grid.hpp"

namespace cliffqm {

struct TrajectorySet {
  std::vector<Vec3> seeds;
  /// Output times shared by all paths.
  std::vector<double> times;
  /// paths[i][n] is the position of seed i at times[n]; truncated paths are shorter.
  std::vector<std::vector<Vec3>> paths;
  std::vector<bool> truncated;
};

/// Velocity at r, or nullopt outside a clamped grid or inside a masked cell.
[[nodiscard]] std::optional<Vec3> interpolate(const GridField<Vec3>& v, const Vec3& r);

/// Integrates from the first to the last frame with step dt.
[[nodiscard]] TrajectorySet integrate_trajectories(const SnapshotSeries<Vec3>& velocity,
                                                   const std::vector<Vec3>& seeds, double dt);

/// 1D only: first output index at which two live paths swap order.
[[nodiscard]] std::optional<std::size_t> first_crossing(const TrajectorySet& set);

}  // namespace cliffqm
