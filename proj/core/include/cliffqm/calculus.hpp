// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file calculus.hpp
 * @brief Second-order finite differences on GridField and SnapshotSeries.
 *
 * Interior points use central stencils. Clamped edges use the one-sided
 * second-order forms
 *   f'  ~ (-3 f0 + 4 f1 - f2) / 2h
 *   f'' ~ (2 f0 - 5 f1 + 4 f2 - f3) / h^2
 * Periodic axes wrap. Axes beyond the grid dimension differentiate to zero.
 *
 * V needs V + V, V - V and V * double (real, complex, Vec3, Multivector).
 */

#pragma once

#include <type_traits>

#include "cliffqm/grid.hpp"
#include "cliffqm/multivector.hpp"

namespace cliffqm {

namespace detail {

template <class V>
V zero_like(const V& v) {
  if constexpr (std::is_same_v<V, Multivector>) {
    return Multivector(v.signature());
  } else {
    return V{};
  }
}

enum class Order { first, second };

template <class V>
V stencil_at(const GridField<V>& f, int axis, std::size_t p, Order order) {
  const Grid& g = f.grid();
  const double h = g.spacing(axis);
  const std::size_t n = g.count(axis);
  const std::size_t s = g.stride(axis);
  const std::size_t c = g.coords(p)[static_cast<std::size_t>(axis)];

  if (g.boundary() == Boundary::periodic || (c > 0 && c + 1 < n)) {
    const std::size_t im = c == 0 ? p + (n - 1) * s : p - s;
    const std::size_t ip = c + 1 == n ? p - (n - 1) * s : p + s;
    if (order == Order::first) return (f[ip] - f[im]) * (0.5 / h);
    return (f[ip] + f[im] - f[p] * 2.0) * (1.0 / (h * h));
  }
  // One-sided: walk inward from the edge.
  const bool low = c == 0;
  auto at = [&](std::size_t k) { return low ? f[p + k * s] : f[p - k * s]; };
  if (order == Order::first) {
    const V d = (at(1) * 4.0 - at(0) * 3.0 - at(2)) * (0.5 / h);
    return low ? d : d * -1.0;
  }
  return (at(0) * 2.0 - at(1) * 5.0 + at(2) * 4.0 - at(3)) * (1.0 / (h * h));
}

}  // namespace detail

/// d f / d x_axis.
template <class V>
[[nodiscard]] GridField<V> partial(const GridField<V>& f, int axis) {
  std::vector<V> out;
  out.reserve(f.size());
  if (axis >= f.grid().dim()) {
    for (const V& v : f) out.push_back(detail::zero_like(v));
  } else {
    for (std::size_t p = 0; p < f.size(); ++p) {
      out.push_back(detail::stencil_at(f, axis, p, detail::Order::first));
    }
  }
  return GridField<V>(f.grid(), std::move(out));
}

/// d^2 f / d x_axis^2.
template <class V>
[[nodiscard]] GridField<V> second_partial(const GridField<V>& f, int axis) {
  std::vector<V> out;
  out.reserve(f.size());
  if (axis >= f.grid().dim()) {
    for (const V& v : f) out.push_back(detail::zero_like(v));
  } else {
    for (std::size_t p = 0; p < f.size(); ++p) {
      out.push_back(detail::stencil_at(f, axis, p, detail::Order::second));
    }
  }
  return GridField<V>(f.grid(), std::move(out));
}

[[nodiscard]] inline GridField<Vec3> gradient(const GridField<double>& f) {
  GridField<Vec3> out(f.grid(), Vec3{});
  for (int a = 0; a < f.grid().dim(); ++a) {
    const GridField<double> d = partial(f, a);
    for (std::size_t p = 0; p < f.size(); ++p) out[p][static_cast<std::size_t>(a)] = d[p];
  }
  return out;
}

template <class V>
[[nodiscard]] GridField<V> laplacian(const GridField<V>& f) {
  GridField<V> out = second_partial(f, 0);
  for (int a = 1; a < f.grid().dim(); ++a) {
    const GridField<V> d = second_partial(f, a);
    for (std::size_t p = 0; p < f.size(); ++p) out[p] = out[p] + d[p];
  }
  return out;
}

/// Component field v_c.
[[nodiscard]] inline GridField<double> component(const GridField<Vec3>& v, int c) {
  return map_field(v, [c](const Vec3& x) { return x[static_cast<std::size_t>(c)]; });
}

[[nodiscard]] inline GridField<Vec3> curl(const GridField<Vec3>& v) {
  std::array<std::array<GridField<double>, 3>, 3> d{{
      {partial(component(v, 0), 0), partial(component(v, 0), 1), partial(component(v, 0), 2)},
      {partial(component(v, 1), 0), partial(component(v, 1), 1), partial(component(v, 1), 2)},
      {partial(component(v, 2), 0), partial(component(v, 2), 1), partial(component(v, 2), 2)},
  }};
  GridField<Vec3> out(v.grid(), Vec3{});
  for (std::size_t p = 0; p < v.size(); ++p) {
    out[p] = {d[2][1][p] - d[1][2][p], d[0][2][p] - d[2][0][p], d[1][0][p] - d[0][1][p]};
  }
  return out;
}

[[nodiscard]] inline GridField<double> divergence(const GridField<Vec3>& v) {
  GridField<double> out(v.grid(), 0.0);
  for (int a = 0; a < v.grid().dim(); ++a) {
    const GridField<double> d = partial(component(v, a), a);
    for (std::size_t p = 0; p < v.size(); ++p) out[p] += d[p];
  }
  return out;
}

/// (f_{k+1} - f_{k-1}) / 2dt; needs 1 <= k <= size - 2.
template <class V>
[[nodiscard]] GridField<V> time_derivative(const SnapshotSeries<V>& s, std::size_t k) {
  if (s.size() < 3 || k < 1 || k + 2 > s.size()) {
    throw std::out_of_range("time derivative needs interior frame 1.." +
                            std::to_string(s.size() < 2 ? 0 : s.size() - 2) + ", got " +
                            std::to_string(k));
  }
  const double inv = 0.5 / s.dt();
  const GridField<V>& a = s[k + 1];
  const GridField<V>& b = s[k - 1];
  std::vector<V> out;
  out.reserve(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out.push_back((a[p] - b[p]) * inv);
  return GridField<V>(a.grid(), std::move(out));
}

}  // namespace cliffqm
