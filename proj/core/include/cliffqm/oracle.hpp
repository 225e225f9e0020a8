// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Standard matrix formalism used as ground truth for the algebraic code.
 *
 * Cl(3,0) maps to 2x2 complex matrices with e_k -> sigma_k; Cl(0,1) maps to
 * 1x1 with e -> i. Only multivector coefficients are read; no Clifford
 * arithmetic is used here.
 */

#pragma once

#include <Eigen/Dense>

#include "cliffqm/grid.hpp"
#include "cliffqm/multivector.hpp"
#include "cliffqm/spinor.hpp"

namespace cliffqm::oracle {

using MatrixRep = Eigen::MatrixXcd;

[[nodiscard]] MatrixRep pauli_matrix(int k);
[[nodiscard]] MatrixRep matrix_rep(const Multivector& a);

[[nodiscard]] MatrixRep density_matrix(const ColumnSpinor& psi);
[[nodiscard]] MatrixRep density_matrix(complex psi);

/// Re tr(B rho).
[[nodiscard]] double expectation(const MatrixRep& b, const MatrixRep& rho);

/// Psi^dagger sigma Psi (= 2 rho s).
[[nodiscard]] Vec3 spin_density(const ColumnSpinor& psi);

/// T^{0j} = Im(psi* d_j psi), summed over components.
[[nodiscard]] GridField<Vec3> momentum_density(const GridField<complex>& psi);
[[nodiscard]] GridField<Vec3> momentum_density(const GridField<ColumnSpinor>& psi);

/// T^{00} = -Im(psi* d_t psi) at frame k (central difference).
[[nodiscard]] GridField<double> energy_density(const SnapshotSeries<complex>& psi, std::size_t k);
[[nodiscard]] GridField<double> energy_density(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k);

struct MessiahCurrent {
  GridField<Vec3> total;
  GridField<Vec3> convective;
  GridField<Vec3> rotational;
};

/// J = [Im(Psi^dagger grad Psi) + curl(Psi^dagger sigma Psi) / 2] / m.
[[nodiscard]] MessiahCurrent messiah_current(const GridField<ColumnSpinor>& psi, double mass);

}  // namespace cliffqm::oracle
