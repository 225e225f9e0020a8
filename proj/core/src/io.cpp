// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/io.hpp"

#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliffqm {

namespace {

constexpr std::array<const char*, 3> kAxisNames{"x", "y", "z"};

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& out, const Grid& grid, const std::vector<Column>& columns) {
  for (const Column& c : columns) {
    if (c.values.size() != grid.size()) {
      throw std::invalid_argument("column '" + c.name + "' does not match the grid size");
    }
  }
  for (int a = 0; a < grid.dim(); ++a) out << (a ? "," : "") << kAxisNames[static_cast<std::size_t>(a)];
  for (const Column& c : columns) out << ',' << c.name;
  out << '\n';
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Vec3 r = grid.position(p);
    for (int a = 0; a < grid.dim(); ++a) out << (a ? "," : "") << format_double(r[static_cast<std::size_t>(a)]);
    for (const Column& c : columns) out << ',' << format_double(c.values[p]);
    out << '\n';
  }
}

void write_spinor_records(std::ostream& out, const GridField<ColumnSpinor>& psi, int components) {
  if (components != 1 && components != 2) throw std::invalid_argument("spinor records carry 1 or 2 components");
  const Grid& g = psi.grid();
  for (std::size_t p = 0; p < g.size(); ++p) {
    const Vec3 r = g.position(p);
    for (int a = 0; a < g.dim(); ++a) out << format_double(r[static_cast<std::size_t>(a)]) << ' ';
    out << format_double(psi[p].psi1.real()) << ' ' << format_double(psi[p].psi1.imag());
    if (components == 2) {
      out << ' ' << format_double(psi[p].psi2.real()) << ' ' << format_double(psi[p].psi2.imag());
    }
    out << '\n';
  }
}

std::vector<SpinorRecord> read_spinor_records(std::istream& in, int dim, int components) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  if (components != 1 && components != 2) throw std::invalid_argument("spinor records carry 1 or 2 components");
  std::vector<SpinorRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    SpinorRecord rec;
    for (int a = 0; a < dim; ++a) fields >> rec.position[static_cast<std::size_t>(a)];
    double re1 = 0, im1 = 0, re2 = 0, im2 = 0;
    fields >> re1 >> im1;
    if (components == 2) fields >> re2 >> im2;
    std::string extra;
    if (fields.fail() || (fields >> extra)) {
      throw std::runtime_error("spinor record line " + std::to_string(line_no) + ": expected " +
                               std::to_string(dim + 2 * components) + " numbers");
    }
    rec.psi = {{re1, im1}, {re2, im2}};
    out.push_back(rec);
  }
  return out;
}

void write_trajectory_csv(std::ostream& out, const TrajectorySet& set, int dim) {
  out << "seed_id,t";
  for (int a = 0; a < dim; ++a) out << ',' << kAxisNames[static_cast<std::size_t>(a)];
  out << ",truncated_flag\n";
  for (std::size_t i = 0; i < set.paths.size(); ++i) {
    const auto& path = set.paths[i];
    for (std::size_t n = 0; n < path.size(); ++n) {
      out << i << ',' << format_double(set.times[n]);
      for (int a = 0; a < dim; ++a) out << ',' << format_double(path[n][static_cast<std::size_t>(a)]);
      out << ',' << (set.truncated[i] && n + 1 == path.size() ? 1 : 0) << '\n';
    }
  }
}

}  // namespace cliffqm
