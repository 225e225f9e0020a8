// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenario.hpp
 * @brief Closed-form wavefunctions sampled onto grids (hbar = 1).
 */

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cliffqm/grid.hpp"
#include "cliffqm/spinor.hpp"

namespace cliffqm {

/// A exp(i(k.x - w t)) with w = k^2 / 2m.
struct PlaneWave {
  complex amplitude{1.0, 0.0};
  Vec3 k;
  double mass = 1.0;
};

/// Freely evolving, normalized Gaussian packet; the width sigma is the
/// position-density standard deviation at t = 0 along every active axis.
struct GaussianPacket {
  double sigma = 1.0;
  Vec3 x0;
  Vec3 k0;
  double mass = 1.0;
};

/// Ground state of V = m w^2 r^2 / 2; energy d w / 2 in d dimensions.
struct HarmonicGroundState {
  double omega = 1.0;
  double mass = 1.0;
};

using ScalarState = std::variant<PlaneWave, GaussianPacket, HarmonicGroundState>;

/// (c1 f1, c2 f2) from two scalar states.
struct PauliSuperposition {
  complex c1{1.0, 0.0};
  ScalarState first = PlaneWave{};
  complex c2{0.0, 0.0};
  ScalarState second = PlaneWave{};
};

/// c0 + amplitude * sin(k.x - omega t + phase).
struct Wave {
  double c0 = 0.0;
  double amplitude = 0.0;
  Vec3 k;
  double omega = 0.0;
  double phase = 0.0;

  [[nodiscard]] double operator()(const Vec3& r, double t) const noexcept;
  [[nodiscard]] Vec3 gradient(const Vec3& r, double t) const noexcept;
  [[nodiscard]] double time_derivative(const Vec3& r, double t) const noexcept;
};

[[nodiscard]] inline Wave constant_wave(double c) {
  Wave w;
  w.c0 = c;
  return w;
}

/// Pointwise from_euler of analytic angle fields, with an optional
/// Gaussian envelope exp(-|r - center|^2 / 4 sigma^2) on R.
struct EulerTexture {
  Wave theta = constant_wave(1.0);
  Wave phi;
  Wave chi;
  Wave amplitude = constant_wave(1.0);
  std::optional<double> envelope_sigma;
  Vec3 envelope_center;

  [[nodiscard]] EulerAngles angles(const Vec3& r, double t) const noexcept;
};

using PauliState = std::variant<PauliSuperposition, EulerTexture>;

enum class StateKind { plane_wave, gaussian, harmonic_ground, pauli_superposition, euler_texture };

[[nodiscard]] StateKind state_kind_from_string(const std::string& name);
[[nodiscard]] std::string to_string(StateKind kind);

[[nodiscard]] complex evaluate(const ScalarState& state, const Vec3& r, int dim, double t);
[[nodiscard]] ColumnSpinor evaluate(const PauliState& state, const Vec3& r, int dim, double t);

[[nodiscard]] GridField<complex> sample(const ScalarState& state, const Grid& grid, double t);
[[nodiscard]] GridField<ColumnSpinor> sample(const PauliState& state, const Grid& grid, double t);

/// sum |psi|^2 dV.
[[nodiscard]] double norm2(const GridField<complex>& psi);
[[nodiscard]] double norm2(const GridField<ColumnSpinor>& psi);

}  // namespace cliffqm
