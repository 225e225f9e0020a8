// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Plain-text exports: field CSV, spinor records and trajectory CSV.
 *
 * Floats are written with 17 significant digits so files round-trip exactly.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cliffqm/grid.hpp"
#include "cliffqm/spinor.hpp"
#include "cliffqm/trajectories.hpp"

namespace cliffqm {

[[nodiscard]] std::string format_double(double v);

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Header `x[,y,z],<names>` then one row per grid point.
void write_field_csv(std::ostream& out, const Grid& grid, const std::vector<Column>& columns);

/// One record per point: `x [y z] Re(psi1) Im(psi1) [Re(psi2) Im(psi2)]`.
void write_spinor_records(std::ostream& out, const GridField<ColumnSpinor>& psi, int components);

struct SpinorRecord {
  Vec3 position;
  ColumnSpinor psi;
};

/// Reads records written by write_spinor_records. Lines starting with '#' are skipped.
[[nodiscard]] std::vector<SpinorRecord> read_spinor_records(std::istream& in, int dim, int components);

/// `seed_id,t,x[,y,z],truncated_flag`; the flag is 1 on the last row of a truncated path.
void write_trajectory_csv(std::ostream& out, const TrajectorySet& set, int dim);

}  // namespace cliffqm
