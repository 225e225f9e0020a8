// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cliffqm {

namespace {

struct AxisCell {
  std::size_t lo = 0;
  std::size_t hi = 0;
  double frac = 0.0;
};

std::optional<AxisCell> locate(const Grid& g, int a, double x) {
  const std::size_t n = g.count(a);
  const double h = g.spacing(a);
  const double u = (x - g.axis(a).min) / h;
  if (g.boundary() == Boundary::periodic) {
    const double len = static_cast<double>(n);
    double w = std::fmod(u, len);
    if (w < 0) w += len;
    auto i = static_cast<std::size_t>(std::floor(w));
    if (i >= n) i = n - 1;
    return AxisCell{i, (i + 1) % n, w - static_cast<double>(i)};
  }
  if (u < 0.0 || u > static_cast<double>(n - 1)) return std::nullopt;
  auto i = std::min(static_cast<std::size_t>(std::floor(u)), n - 2);
  return AxisCell{i, i + 1, u - static_cast<double>(i)};
}

bool inside(const Grid& g, const Vec3& r) {
  for (int a = 0; a < g.dim(); ++a) {
    if (!locate(g, a, r[static_cast<std::size_t>(a)])) return false;
  }
  return true;
}

Vec3 wrap_position(const Grid& g, Vec3 r) {
  if (g.boundary() != Boundary::periodic) return r;
  for (int a = 0; a < g.dim(); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    const double len = static_cast<double>(g.count(a)) * g.spacing(a);
    double w = std::fmod(r[ua] - g.axis(a).min, len);
    if (w < 0) w += len;
    r[ua] = g.axis(a).min + w;
  }
  return r;
}

std::optional<Vec3> velocity_at(const SnapshotSeries<Vec3>& v, double t, const Vec3& r) {
  const auto& times = v.times();
  const double dt = v.dt();
  double u = (t - times.front()) / dt;
  auto k = static_cast<std::size_t>(std::clamp(std::floor(u), 0.0, static_cast<double>(times.size() - 2)));
  const double frac = std::clamp(u - static_cast<double>(k), 0.0, 1.0);
  const auto a = interpolate(v[k], r);
  const auto b = interpolate(v[k + 1], r);
  if (!a || !b) return std::nullopt;
  return *a * (1.0 - frac) + *b * frac;
}

}  // namespace

std::optional<Vec3> interpolate(const GridField<Vec3>& v, const Vec3& r) {
  const Grid& g = v.grid();
  std::array<AxisCell, 3> cells{};
  for (int a = 0; a < g.dim(); ++a) {
    const auto c = locate(g, a, r[static_cast<std::size_t>(a)]);
    if (!c) return std::nullopt;
    cells[static_cast<std::size_t>(a)] = *c;
  }
  Vec3 out;
  const int corners = 1 << g.dim();
  for (int m = 0; m < corners; ++m) {
    double w = 1.0;
    std::array<std::size_t, 3> idx{};
    for (int a = 0; a < g.dim(); ++a) {
      const AxisCell& c = cells[static_cast<std::size_t>(a)];
      const bool upper = (m >> a) & 1;
      idx[static_cast<std::size_t>(a)] = upper ? c.hi : c.lo;
      w *= upper ? c.frac : 1.0 - c.frac;
    }
    const Vec3& val = v[g.index(idx[0], idx[1], idx[2])];
    if (w == 0.0) continue;
    if (!std::isfinite(val.x + val.y + val.z)) return std::nullopt;
    out += val * w;
  }
  return out;
}

TrajectorySet integrate_trajectories(const SnapshotSeries<Vec3>& velocity, const std::vector<Vec3>& seeds,
                                     double dt) {
  if (velocity.size() < 2) throw std::invalid_argument("trajectories need at least two velocity frames");
  if (!(dt > 0.0)) throw std::invalid_argument("trajectory step must be positive");
  const Grid& g = velocity.grid();
  for (const Vec3& s : seeds) {
    if (!interpolate(velocity[0], s)) {
      throw std::invalid_argument("seed (" + std::to_string(s.x) + ", " + std::to_string(s.y) + ", " +
                                  std::to_string(s.z) + ") lies outside the grid or in a masked cell");
    }
  }

  const double t0 = velocity.times().front();
  const double t1 = velocity.times().back();
  const auto steps = static_cast<std::size_t>(std::llround((t1 - t0) / dt));
  TrajectorySet set;
  set.seeds = seeds;
  set.truncated.assign(seeds.size(), false);
  set.paths.assign(seeds.size(), {});
  for (std::size_t n = 0; n <= steps; ++n) set.times.push_back(t0 + static_cast<double>(n) * dt);

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Vec3 r = seeds[i];
    set.paths[i].push_back(r);
    for (std::size_t n = 0; n < steps; ++n) {
      const double t = set.times[n];
      const auto k1 = velocity_at(velocity, t, r);
      const auto k2 = k1 ? velocity_at(velocity, t + dt / 2, wrap_position(g, r + *k1 * (dt / 2))) : std::nullopt;
      const auto k3 = k2 ? velocity_at(velocity, t + dt / 2, wrap_position(g, r + *k2 * (dt / 2))) : std::nullopt;
      const auto k4 = k3 ? velocity_at(velocity, t + dt, wrap_position(g, r + *k3 * dt)) : std::nullopt;
      if (!k4) {
        set.truncated[i] = true;
        break;
      }
      const Vec3 next = wrap_position(g, r + (*k1 + *k2 * 2.0 + *k3 * 2.0 + *k4) * (dt / 6.0));
      if (!inside(g, next)) {
        set.truncated[i] = true;
        break;
      }
      r = next;
      set.paths[i].push_back(r);
    }
  }
  return set;
}

std::optional<std::size_t> first_crossing(const TrajectorySet& set) {
  std::vector<std::size_t> order(set.seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return set.seeds[a].x < set.seeds[b].x; });
  for (std::size_t n = 0; n < set.times.size(); ++n) {
    double prev = -INFINITY;
    for (std::size_t i : order) {
      if (set.paths[i].size() <= n) continue;
      const double x = set.paths[i][n].x;
      if (x < prev) return n;
      prev = x;
    }
  }
  return std::nullopt;
}

}  // namespace cliffqm
