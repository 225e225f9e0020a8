// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/oracle.hpp"

#include <stdexcept>

#include "cliffqm/calculus.hpp"

namespace cliffqm::oracle {

namespace {

constexpr complex kI{0.0, 1.0};

Eigen::Vector2cd column(const ColumnSpinor& psi) { return {psi.psi1, psi.psi2}; }

complex conj_dot(const ColumnSpinor& a, const ColumnSpinor& b) {
  return std::conj(a.psi1) * b.psi1 + std::conj(a.psi2) * b.psi2;
}

}  // namespace

MatrixRep pauli_matrix(int k) {
  MatrixRep m = MatrixRep::Zero(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::out_of_range("Pauli matrix index must be 0..3");
  }
  return m;
}

MatrixRep matrix_rep(const Multivector& a) {
  if (a.signature() == kSchrodinger) {
    MatrixRep m(1, 1);
    m(0, 0) = complex(a[0], a[1]);
    return m;
  }
  // e23 = i s1, e13 = -i s2, e12 = i s3, e123 = i.
  return a[0] * pauli_matrix(0) + a[1] * pauli_matrix(1) + a[2] * pauli_matrix(2) +
         a[3] * pauli_matrix(3) + (kI * a[4]) * pauli_matrix(1) - (kI * a[5]) * pauli_matrix(2) +
         (kI * a[6]) * pauli_matrix(3) + (kI * a[7]) * pauli_matrix(0);
}

MatrixRep density_matrix(const ColumnSpinor& psi) {
  const Eigen::Vector2cd v = column(psi);
  return v * v.adjoint();
}

MatrixRep density_matrix(complex psi) {
  MatrixRep m(1, 1);
  m(0, 0) = std::norm(psi);
  return m;
}

double expectation(const MatrixRep& b, const MatrixRep& rho) { return (b * rho).trace().real(); }

Vec3 spin_density(const ColumnSpinor& psi) {
  const Eigen::Vector2cd v = column(psi);
  Vec3 s;
  for (int k = 1; k <= 3; ++k) {
    s[static_cast<std::size_t>(k - 1)] = (v.adjoint() * pauli_matrix(k) * v)(0, 0).real();
  }
  return s;
}

GridField<Vec3> momentum_density(const GridField<complex>& psi) {
  GridField<Vec3> out(psi.grid(), Vec3{});
  for (int a = 0; a < psi.grid().dim(); ++a) {
    const GridField<complex> d = partial(psi, a);
    for (std::size_t p = 0; p < psi.size(); ++p) {
      out[p][static_cast<std::size_t>(a)] = (std::conj(psi[p]) * d[p]).imag();
    }
  }
  return out;
}

GridField<Vec3> momentum_density(const GridField<ColumnSpinor>& psi) {
  GridField<Vec3> out(psi.grid(), Vec3{});
  for (int a = 0; a < psi.grid().dim(); ++a) {
    const GridField<ColumnSpinor> d = partial(psi, a);
    for (std::size_t p = 0; p < psi.size(); ++p) {
      out[p][static_cast<std::size_t>(a)] = conj_dot(psi[p], d[p]).imag();
    }
  }
  return out;
}

GridField<double> energy_density(const SnapshotSeries<complex>& psi, std::size_t k) {
  const GridField<complex> dt = time_derivative(psi, k);
  const GridField<complex>& f = psi[k];
  return zip_fields(f, dt, [](complex a, complex b) { return -(std::conj(a) * b).imag(); });
}

GridField<double> energy_density(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k) {
  const GridField<ColumnSpinor> dt = time_derivative(psi, k);
  const GridField<ColumnSpinor>& f = psi[k];
  return zip_fields(f, dt, [](const ColumnSpinor& a, const ColumnSpinor& b) {
    return -conj_dot(a, b).imag();
  });
}

MessiahCurrent messiah_current(const GridField<ColumnSpinor>& psi, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  const GridField<Vec3> conv = map_field(momentum_density(psi), [mass](const Vec3& j) { return j / mass; });
  const GridField<Vec3> spin = map_field(psi, [](const ColumnSpinor& c) { return spin_density(c); });
  const GridField<Vec3> rot = map_field(curl(spin), [mass](const Vec3& c) { return c / (2.0 * mass); });
  GridField<Vec3> total = zip_fields(conv, rot, [](const Vec3& a, const Vec3& b) { return a + b; });
  return {std::move(total), conv, rot};
}

}  // namespace cliffqm::oracle
