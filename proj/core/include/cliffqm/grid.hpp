// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file grid.hpp
 * @brief Uniform 1-3D grids, sampled fields and time-snapshot series.
 *
 * Linear point index runs x fastest: i + nx * (j + ny * k).
 * Clamped axes include both end points (h = (max-min)/(n-1)); periodic axes
 * exclude max (h = (max-min)/n).
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffqm/vec3.hpp"

namespace cliffqm {

enum class Boundary { periodic, clamped };

[[nodiscard]] std::string to_string(Boundary b);
[[nodiscard]] Boundary boundary_from_string(const std::string& name);

struct Axis {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 5;

  friend bool operator==(const Axis&, const Axis&) = default;
};

class Grid {
 public:
  static constexpr std::size_t kMinPoints = 5;

  Grid(std::vector<Axis> axes, Boundary boundary);
  [[nodiscard]] static Grid line(double min, double max, std::size_t count, Boundary boundary);

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(axes_.size()); }
  [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
  [[nodiscard]] const Axis& axis(int a) const { return axes_.at(static_cast<std::size_t>(a)); }
  [[nodiscard]] std::size_t count(int a) const noexcept {
    return a < dim() ? axes_[static_cast<std::size_t>(a)].count : 1;
  }
  [[nodiscard]] double spacing(int a) const noexcept {
    return a < dim() ? spacing_[static_cast<std::size_t>(a)] : 0.0;
  }
  /// Largest spacing over the active axes.
  [[nodiscard]] double h() const noexcept;
  /// Volume element prod(h_a) for quadrature sums.
  [[nodiscard]] double cell_volume() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t stride(int a) const noexcept {
    return a < dim() ? stride_[static_cast<std::size_t>(a)] : 0;
  }

  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j = 0, std::size_t k = 0) const noexcept {
    return i + stride_[1] * j + stride_[2] * k;
  }
  [[nodiscard]] std::array<std::size_t, 3> coords(std::size_t linear) const noexcept;
  [[nodiscard]] double coordinate(int a, std::size_t i) const noexcept {
    return axes_[static_cast<std::size_t>(a)].min + spacing_[static_cast<std::size_t>(a)] * static_cast<double>(i);
  }
  [[nodiscard]] Vec3 position(std::size_t linear) const noexcept;
  /// Points within `layer` cells of a clamped edge; never true on periodic grids.
  [[nodiscard]] bool near_boundary(std::size_t linear, std::size_t layer) const noexcept;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.boundary_ == b.boundary_ && a.axes_ == b.axes_;
  }

 private:
  std::vector<Axis> axes_;
  Boundary boundary_;
  std::array<double, 3> spacing_{};
  std::array<std::size_t, 3> stride_{};
  std::size_t size_ = 0;
};

/// Values of type V at every grid point.
template <class V>
class GridField {
 public:
  using value_type = V;

  GridField(Grid grid, V fill) : grid_(std::move(grid)), values_(grid_.size(), fill) {}
  GridField(Grid grid, std::vector<V> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw std::invalid_argument("field size " + std::to_string(values_.size()) +
                                  " does not match grid size " + std::to_string(grid_.size()));
    }
  }

  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const V& operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] V& operator[](std::size_t i) noexcept { return values_[i]; }
  [[nodiscard]] const std::vector<V>& values() const noexcept { return values_; }
  [[nodiscard]] std::vector<V>& values() noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  Grid grid_;
  std::vector<V> values_;
};

/// Pointwise map over a field.
template <class V, class F>
[[nodiscard]] auto map_field(const GridField<V>& f, F&& fn) {
  using R = std::decay_t<decltype(fn(f[0]))>;
  std::vector<R> out;
  out.reserve(f.size());
  for (const V& v : f) out.push_back(fn(v));
  return GridField<R>(f.grid(), std::move(out));
}

/// Pointwise combination of two fields on the same grid.
template <class A, class B, class F>
[[nodiscard]] auto zip_fields(const GridField<A>& a, const GridField<B>& b, F&& fn) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
  using R = std::decay_t<decltype(fn(a[0], b[0]))>;
  std::vector<R> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(fn(a[i], b[i]));
  return GridField<R>(a.grid(), std::move(out));
}

/// Frames of a field at uniformly spaced times.
template <class V>
class SnapshotSeries {
 public:
  SnapshotSeries() = default;

  void push_back(double t, GridField<V> frame) {
    if (!frames_.empty()) {
      if (!(frame.grid() == frames_.front().grid())) {
        throw std::invalid_argument("snapshot grid differs from the series grid");
      }
      if (!(t > times_.back())) throw std::invalid_argument("snapshot times must increase");
      if (times_.size() >= 2) {
        const double expected = times_.back() + dt();
        if (std::fabs(t - expected) > 1e-9 * std::fmax(1.0, std::fabs(dt()))) {
          throw std::invalid_argument("snapshot times must be uniformly spaced");
        }
      }
    }
    times_.push_back(t);
    frames_.push_back(std::move(frame));
  }

  [[nodiscard]] std::size_t size() const noexcept { return frames_.size(); }
  [[nodiscard]] bool empty() const noexcept { return frames_.empty(); }
  [[nodiscard]] double dt() const {
    if (times_.size() < 2) throw std::logic_error("time step needs at least two frames");
    return times_[1] - times_[0];
  }
  [[nodiscard]] const std::vector<double>& times() const noexcept { return times_; }
  [[nodiscard]] double time(std::size_t k) const { return times_.at(k); }
  [[nodiscard]] const GridField<V>& frame(std::size_t k) const { return frames_.at(k); }
  [[nodiscard]] const GridField<V>& operator[](std::size_t k) const { return frames_.at(k); }
  [[nodiscard]] const GridField<V>& back() const { return frames_.back(); }
  [[nodiscard]] const Grid& grid() const { return frames_.at(0).grid(); }

 private:
  std::vector<double> times_;
  std::vector<GridField<V>> frames_;
};

/// Applies `fn` to every frame, keeping the time axis.
template <class V, class F>
[[nodiscard]] auto map_series(const SnapshotSeries<V>& s, F&& fn) {
  using R = typename std::decay_t<decltype(fn(s[0]))>::value_type;
  SnapshotSeries<R> out;
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s.time(k), fn(s[k]));
  return out;
}

}  // namespace cliffqm
