// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file observables.hpp
 * @brief Bohm fields built from ideal-spinor fields: Omega, P_B, E_B, W,
 *        the quantum potential, currents and expectation values.
 *
 * Fields are stored per unit density. Points where rho < 1e-12 max(rho) are
 * nodes; every quantity that divides by rho is NaN there.
 *
 * hbar = 1. The spin vector s has |s| = 1/2 and S = e123 s.
 */

#pragma once

#include <optional>
#include <vector>

#include "cliffqm/grid.hpp"
#include "cliffqm/multivector.hpp"
#include "cliffqm/spinor.hpp"

namespace cliffqm {

inline constexpr double kNodeThreshold = 1e-12;
/// Euler-angle outputs that need phi are dropped where sin(theta) is below this.
inline constexpr double kPoleThreshold = 1e-3;

[[nodiscard]] GridField<IdealSpinor> to_ideal_field(const GridField<complex>& psi);
[[nodiscard]] GridField<IdealSpinor> to_ideal_field(const GridField<ColumnSpinor>& psi);
[[nodiscard]] SnapshotSeries<IdealSpinor> to_ideal_series(const SnapshotSeries<complex>& psi);
[[nodiscard]] SnapshotSeries<IdealSpinor> to_ideal_series(const SnapshotSeries<ColumnSpinor>& psi);
/// Cl(0,1) fields become (psi, 0).
[[nodiscard]] GridField<ColumnSpinor> to_column_field(const GridField<IdealSpinor>& phi);

[[nodiscard]] GridField<double> density(const GridField<IdealSpinor>& phi);
[[nodiscard]] GridField<Multivector> rotor_field(const GridField<IdealSpinor>& phi);
[[nodiscard]] SnapshotSeries<Multivector> rotor_series(const SnapshotSeries<IdealSpinor>& phi);
/// s = U e3 U~ / 2 as a 3-vector.
[[nodiscard]] GridField<Vec3> spin_field(const GridField<IdealSpinor>& phi);
[[nodiscard]] GridField<Multivector> spin_bivector_field(const GridField<IdealSpinor>& phi);

/// true at nodes.
[[nodiscard]] std::vector<bool> node_mask(const GridField<double>& rho, double threshold = kNodeThreshold);

struct OmegaField {
  /// 2 (d_j U) U~ per active axis.
  std::vector<GridField<Multivector>> spatial;
  /// -2 U (d_j U~) per active axis.
  std::vector<GridField<Multivector>> alternate;
  /// 2 (d_t U) U~, present when built from a series.
  std::optional<GridField<Multivector>> temporal;
  /// Largest coefficient outside the bivector grade (the e grade in Cl(0,1)).
  double purity_defect = 0.0;
};

[[nodiscard]] OmegaField omega_fields(const GridField<Multivector>& rotor);
[[nodiscard]] OmegaField omega_fields(const SnapshotSeries<Multivector>& rotor, std::size_t k);

/// Cl(0,1): <-e Omega^j / 2>_0 = d_j S. Cl(3,0): -<Omega^j S>_0.
[[nodiscard]] GridField<Vec3> bohm_momentum(const GridField<IdealSpinor>& phi);

/// -i alpha [(d_j Phi_L) Phi_R - Phi_L (d_j Phi_R)] / rho evaluated in full, with
/// (i, alpha) = (e, 1/2) in Cl(0,1) and (e123, 1) in Cl(3,0). The scalar part is
/// P_B; the remainder is kept for diagnostics only.
struct MomentumDefiningForm {
  GridField<Vec3> momentum;
  std::vector<GridField<Multivector>> remainder;
};
[[nodiscard]] MomentumDefiningForm momentum_defining_form(const GridField<IdealSpinor>& phi);

/// (rho1 P1 + rho2 P2) / rho with P_i the wrapped phase gradient of component i.
[[nodiscard]] GridField<Vec3> momentum_weighted_mean(const GridField<ColumnSpinor>& psi);
/// (grad chi + cos(theta) grad phi) / 2.
[[nodiscard]] GridField<Vec3> momentum_euler_form(const GridField<ColumnSpinor>& psi);

/// Cl(0,1): <e Omega_t / 2>_0 = -d_t S. Cl(3,0): <Omega_t S>_0.
[[nodiscard]] GridField<double> bohm_energy(const SnapshotSeries<IdealSpinor>& phi, std::size_t k);
[[nodiscard]] GridField<double> energy_weighted_mean(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k);
/// -(d_t chi + cos(theta) d_t phi) / 2.
[[nodiscard]] GridField<double> energy_euler_form(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k);

/// W_k = rho^-1 d_k(rho S) per axis, and the assembled sum_k e_k W_k.
struct WField {
  std::vector<GridField<Multivector>> axis;
  GridField<Multivector> assembled;
};
[[nodiscard]] WField w_field(const GridField<double>& rho, const GridField<Multivector>& spin_bivector);

struct QuantumPotential {
  /// -[2 lap(ln rho) + |grad ln rho|^2] / 8m - s.lap(s) / 2m; the s term is
  /// absent in Cl(0,1).
  GridField<double> Q;
  /// -lap(R) / 2mR.
  GridField<double> Q1;
  /// [(grad theta)^2 + sin^2(theta) (grad phi)^2] / 8m; zero for Cl(0,1).
  GridField<double> Q2;
  /// sum_k <(d_k W_k) S>_0 / m + sum_k <W_k W_k>_0 / 2m; equals Q for Cl(0,1).
  GridField<double> Q_w;
};
[[nodiscard]] QuantumPotential quantum_potential(const GridField<IdealSpinor>& phi, double mass);

struct PauliCurrent {
  /// rho P_B / m.
  GridField<Vec3> J_conv;
  /// curl(rho s) / m; zero for Cl(0,1).
  GridField<Vec3> J_rot;
  /// (J_conv + J_rot) / rho.
  GridField<Vec3> v;
};
[[nodiscard]] PauliCurrent pauli_current(const GridField<IdealSpinor>& phi, double mass);

/// d * <B rho_c>_0.
[[nodiscard]] double expectation(const Multivector& b, const CliffordDensityElement& rho_c);

/// Euler angles and their derivatives from wrapped component phases.
struct EulerGradients {
  GridField<double> theta;
  GridField<double> cos_theta;
  GridField<Vec3> grad_theta;
  GridField<Vec3> grad_phi;
  GridField<Vec3> grad_chi;
  /// true where sin(theta) < kPoleThreshold and both components are present.
  std::vector<bool> pole;
};
[[nodiscard]] EulerGradients euler_gradients(const GridField<ColumnSpinor>& psi);

/// Central time rates of the Euler angles at frame k, same phase gauge.
struct EulerRates {
  GridField<double> d_cos_theta;
  GridField<double> d_phi;
  GridField<double> d_chi;
};
[[nodiscard]] EulerRates euler_rates(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k);

}  // namespace cliffqm
