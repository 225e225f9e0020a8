// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dynamics.hpp
 * @brief Unitary time evolution under H = -lap / 2m + V (hbar = 1).
 *
 * Crank-Nicolson works on any grid. In 1D the potential sits inside the
 * tridiagonal system; in 2D/3D the kinetic part is applied axis by axis
 * between two half-step potential phases. Clamped grids hold psi = 0 just
 * outside the end points; periodic grids use a cyclic solve.
 * Split-step Fourier (periodic grids only) uses FFTW.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffqm/grid.hpp"
#include "cliffqm/spinor.hpp"

namespace cliffqm {

enum class Scheme { crank_nicolson, split_step };

[[nodiscard]] std::string to_string(Scheme s);
[[nodiscard]] Scheme scheme_from_string(const std::string& name);

struct EvolutionConfig {
  double mass = 1.0;
  std::optional<GridField<double>> potential;
  double dt = 1e-3;
  std::size_t steps = 100;
  /// Frames are stored at steps save_from, save_from + save_every, ...
  /// (step 0 is the initial state).
  std::size_t save_from = 0;
  std::size_t save_every = 1;
  Scheme scheme = Scheme::crank_nicolson;
  /// Evolution stops once |norm - 1| exceeds this.
  double abort_drift = 1e-4;
};

template <class V>
struct Evolution {
  SnapshotSeries<V> series;
  std::vector<std::string> warnings;
  double max_norm_drift = 0.0;
  bool aborted = false;
};

/// psi0 must be normalized (sum |psi|^2 dV = 1 within 1e-8).
[[nodiscard]] Evolution<complex> evolve_schrodinger(const GridField<complex>& psi0, const EvolutionConfig& cfg);

/// Both components evolve under the same scalar Hamiltonian.
[[nodiscard]] Evolution<ColumnSpinor> evolve_pauli(const GridField<ColumnSpinor>& psi0,
                                                   const EvolutionConfig& cfg);

/// Harmonic potential m w^2 |r|^2 / 2.
[[nodiscard]] GridField<double> harmonic_potential(const Grid& grid, double mass, double omega);

}  // namespace cliffqm
