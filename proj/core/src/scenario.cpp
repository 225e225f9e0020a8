// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffqm {

namespace {

constexpr complex kI{0.0, 1.0};

Vec3 restrict(const Vec3& v, int dim) {
  Vec3 r;
  for (int a = 0; a < dim; ++a) r[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(a)];
  return r;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

complex gaussian_axis(const GaussianPacket& g, double u, double k0, double t) {
  const double s2 = g.sigma * g.sigma;
  const double tau = t / (2.0 * g.mass * s2);
  const complex spread = 1.0 + kI * tau;
  const complex exponent = (-u * u / (4.0 * s2) + kI * k0 * u - kI * s2 * k0 * k0 * tau) / spread;
  return std::pow(2.0 * std::numbers::pi * s2, -0.25) / std::sqrt(spread) * std::exp(exponent);
}

}  // namespace

double Wave::operator()(const Vec3& r, double t) const noexcept {
  return c0 + amplitude * std::sin(dot(k, r) - omega * t + phase);
}

Vec3 Wave::gradient(const Vec3& r, double t) const noexcept {
  return k * (amplitude * std::cos(dot(k, r) - omega * t + phase));
}

double Wave::time_derivative(const Vec3& r, double t) const noexcept {
  return -omega * amplitude * std::cos(dot(k, r) - omega * t + phase);
}

EulerAngles EulerTexture::angles(const Vec3& r, double t) const noexcept {
  double R = amplitude(r, t);
  if (envelope_sigma) {
    const Vec3 d = r - envelope_center;
    R *= std::exp(-dot(d, d) / (4.0 * *envelope_sigma * *envelope_sigma));
  }
  return {theta(r, t), phi(r, t), chi(r, t), R};
}

StateKind state_kind_from_string(const std::string& name) {
  if (name == "plane-wave") return StateKind::plane_wave;
  if (name == "gaussian") return StateKind::gaussian;
  if (name == "harmonic-ground") return StateKind::harmonic_ground;
  if (name == "pauli-superposition") return StateKind::pauli_superposition;
  if (name == "euler-texture") return StateKind::euler_texture;
  throw std::invalid_argument("unknown state kind '" + name + "'");
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::plane_wave: return "plane-wave";
    case StateKind::gaussian: return "gaussian";
    case StateKind::harmonic_ground: return "harmonic-ground";
    case StateKind::pauli_superposition: return "pauli-superposition";
    case StateKind::euler_texture: return "euler-texture";
  }
  throw std::logic_error("bad StateKind");
}

complex evaluate(const ScalarState& state, const Vec3& r, int dim, double t) {
  const Vec3 x = restrict(r, dim);
  return std::visit(
      overloaded{
          [&](const PlaneWave& w) {
            const Vec3 k = restrict(w.k, dim);
            return w.amplitude * std::exp(kI * (dot(k, x) - dot(k, k) * t / (2.0 * w.mass)));
          },
          [&](const GaussianPacket& g) {
            complex psi{1.0, 0.0};
            for (std::size_t a = 0; a < static_cast<std::size_t>(dim); ++a) {
              psi *= gaussian_axis(g, x[a] - g.x0[a], g.k0[a], t);
            }
            return psi;
          },
          [&](const HarmonicGroundState& h) {
            const double mw = h.mass * h.omega;
            const double norm = std::pow(mw / std::numbers::pi, 0.25 * dim);
            return norm * std::exp(-0.5 * mw * dot(x, x)) * std::exp(-kI * (0.5 * dim * h.omega * t));
          },
      },
      state);
}

ColumnSpinor evaluate(const PauliState& state, const Vec3& r, int dim, double t) {
  return std::visit(overloaded{
                        [&](const PauliSuperposition& s) {
                          return ColumnSpinor{s.c1 * evaluate(s.first, r, dim, t),
                                              s.c2 * evaluate(s.second, r, dim, t)};
                        },
                        [&](const EulerTexture& e) { return euler_column(e.angles(restrict(r, dim), t)); },
                    },
                    state);
}

GridField<complex> sample(const ScalarState& state, const Grid& grid, double t) {
  std::vector<complex> v(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) v[p] = evaluate(state, grid.position(p), grid.dim(), t);
  return GridField<complex>(grid, std::move(v));
}

GridField<ColumnSpinor> sample(const PauliState& state, const Grid& grid, double t) {
  std::vector<ColumnSpinor> v(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) v[p] = evaluate(state, grid.position(p), grid.dim(), t);
  return GridField<ColumnSpinor>(grid, std::move(v));
}

double norm2(const GridField<complex>& psi) {
  double s = 0.0;
  for (const complex& z : psi) s += std::norm(z);
  return s * psi.grid().cell_volume();
}

double norm2(const GridField<ColumnSpinor>& psi) {
  double s = 0.0;
  for (const ColumnSpinor& z : psi) s += z.density();
  return s * psi.grid().cell_volume();
}

}  // namespace cliffqm
