// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/grid.hpp"

#include <algorithm>

namespace cliffqm {

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "clamped"; }

Boundary boundary_from_string(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "clamped") return Boundary::clamped;
  throw std::invalid_argument("unknown boundary '" + name + "' (expected periodic or clamped)");
}

Grid::Grid(std::vector<Axis> axes, Boundary boundary) : axes_(std::move(axes)), boundary_(boundary) {
  if (axes_.empty() || axes_.size() > 3) {
    throw std::invalid_argument("grid dimension must be 1, 2 or 3, got " + std::to_string(axes_.size()));
  }
  size_ = 1;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    const Axis& ax = axes_[a];
    if (ax.count < kMinPoints) {
      throw std::invalid_argument("axis " + std::to_string(a) + " has " + std::to_string(ax.count) +
                                  " points; at least " + std::to_string(kMinPoints) + " are required");
    }
    if (!(ax.max > ax.min)) {
      throw std::invalid_argument("axis " + std::to_string(a) + " needs max > min");
    }
    const double cells = boundary_ == Boundary::clamped ? static_cast<double>(ax.count - 1)
                                                        : static_cast<double>(ax.count);
    spacing_[a] = (ax.max - ax.min) / cells;
    stride_[a] = size_;
    size_ *= ax.count;
  }
  for (std::size_t a = axes_.size(); a < 3; ++a) stride_[a] = size_;
}

Grid Grid::line(double min, double max, std::size_t count, Boundary boundary) {
  return Grid({Axis{min, max, count}}, boundary);
}

double Grid::h() const noexcept {
  double m = 0.0;
  for (int a = 0; a < dim(); ++a) m = std::max(m, spacing(a));
  return m;
}

double Grid::cell_volume() const noexcept {
  double v = 1.0;
  for (int a = 0; a < dim(); ++a) v *= spacing(a);
  return v;
}

std::array<std::size_t, 3> Grid::coords(std::size_t linear) const noexcept {
  std::array<std::size_t, 3> c{};
  for (int a = 0; a < dim(); ++a) {
    const std::size_t n = axes_[static_cast<std::size_t>(a)].count;
    c[static_cast<std::size_t>(a)] = linear % n;
    linear /= n;
  }
  return c;
}

Vec3 Grid::position(std::size_t linear) const noexcept {
  const auto c = coords(linear);
  Vec3 r;
  for (int a = 0; a < dim(); ++a) r[static_cast<std::size_t>(a)] = coordinate(a, c[static_cast<std::size_t>(a)]);
  return r;
}

bool Grid::near_boundary(std::size_t linear, std::size_t layer) const noexcept {
  if (boundary_ == Boundary::periodic) return false;
  const auto c = coords(linear);
  for (int a = 0; a < dim(); ++a) {
    const std::size_t i = c[static_cast<std::size_t>(a)];
    const std::size_t n = count(a);
    if (i < layer || i + layer >= n) return true;
  }
  return false;
}

}  // namespace cliffqm
