// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>

#include "cliffqm/grid.hpp"
#include "cliffqm/spinor.hpp"

namespace cliffqm::testing {

template <class V>
GridField<V> fill_field(const Grid& g, const std::function<V(const Vec3&)>& f) {
  GridField<V> out(g, V{});
  for (std::size_t p = 0; p < g.size(); ++p) out[p] = f(g.position(p));
  return out;
}

template <class V>
SnapshotSeries<V> fill_series(const Grid& g, double t0, double dt, std::size_t frames,
                              const std::function<V(const Vec3&, double)>& f) {
  SnapshotSeries<V> s;
  for (std::size_t n = 0; n < frames; ++n) {
    const double t = t0 + static_cast<double>(n) * dt;
    s.push_back(t, fill_field<V>(g, [&](const Vec3& r) { return f(r, t); }));
  }
  return s;
}

inline double max_abs_field(const GridField<double>& a) {
  double m = 0.0;
  for (double v : a) {
    if (std::isfinite(v)) m = std::fmax(m, std::abs(v));
  }
  return m;
}

inline double max_abs_field(const GridField<Vec3>& a) {
  double m = 0.0;
  for (const Vec3& v : a) {
    if (std::isfinite(v.x + v.y + v.z)) m = std::fmax(m, norm(v));
  }
  return m;
}

template <class V>
GridField<V> minus(const GridField<V>& a, const GridField<V>& b) {
  return zip_fields(a, b, [](const V& x, const V& y) { return x - y; });
}

}  // namespace cliffqm::testing
