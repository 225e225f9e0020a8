// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file conservation.hpp
 * @brief Pointwise residuals of the balance laws obeyed by Bohm fields.
 *
 * Each residual is evaluated at an interior frame k of a snapshot series
 * (central time differences need frames k-1 and k+1) and is NaN at nodes.
 */

#pragma once

#include <optional>

#include "cliffqm/grid.hpp"
#include "cliffqm/observables.hpp"

namespace cliffqm {

/// E_B - P_B^2 / 2m - Q - V.
[[nodiscard]] GridField<double> qhj_residual(const GridField<double>& energy, const GridField<Vec3>& momentum,
                                             const GridField<double>& potential_q,
                                             const std::optional<GridField<double>>& potential, double mass);

/// d_t rho + div(rho P_B / m).
[[nodiscard]] GridField<double> continuity_residual(const SnapshotSeries<IdealSpinor>& phi, std::size_t k,
                                                    double mass);

/// d_t s + (P_B . grad) s / m - (s / m) x [lap s + sum_k (d_k ln rho) d_k s].
[[nodiscard]] GridField<Vec3> spin_transport_residual(const SnapshotSeries<IdealSpinor>& phi, std::size_t k,
                                                      double mass);

/// 2 s . (d_t s + (P_B . grad) s / m): the convective rate of |s|^2.
[[nodiscard]] GridField<double> spin_norm_drift(const SnapshotSeries<IdealSpinor>& phi, std::size_t k,
                                                double mass);

struct QuantumTorque {
  /// d_t P_B + grad(P_B^2) / 2m.
  GridField<Vec3> dP_dt;
  GridField<Vec3> grad_Q;
  /// [d_t(cos theta) grad phi - grad(cos theta) d_t phi] / 2.
  GridField<Vec3> torque;
  /// dP_dt + grad Q + grad V - torque.
  GridField<Vec3> residual;
};

/// Pole neighbourhoods (sin theta < kPoleThreshold) are NaN in torque and residual.
[[nodiscard]] QuantumTorque quantum_torque(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k, double mass,
                                           const std::optional<GridField<double>>& potential);

}  // namespace cliffqm
