// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spinor.hpp
 * @brief Minimal-left-ideal spinors Phi_L = R U eps and Clifford density elements.
 *
 * The amplitude R is stored apart from the unit even element U (polar split).
 * Three parametrizations are interconvertible:
 *   - algebraic: R and the g-coefficients of U
 *   - column:    psi (Cl(0,1)) or (psi1, psi2) (Cl(3,0))
 *   - Euler:     (theta, phi, chi, R) for Cl(3,0)
 */

#pragma once

#include <array>
#include <complex>

#include "cliffqm/multivector.hpp"
#include "cliffqm/vec3.hpp"

namespace cliffqm {

using complex = std::complex<double>;

/// Two-component Pauli column (psi1, psi2)^T.
struct ColumnSpinor {
  complex psi1{};
  complex psi2{};

  [[nodiscard]] double density() const noexcept { return std::norm(psi1) + std::norm(psi2); }

  ColumnSpinor& operator+=(const ColumnSpinor& o) noexcept {
    psi1 += o.psi1;
    psi2 += o.psi2;
    return *this;
  }
  ColumnSpinor& operator-=(const ColumnSpinor& o) noexcept {
    psi1 -= o.psi1;
    psi2 -= o.psi2;
    return *this;
  }
  ColumnSpinor& operator*=(complex s) noexcept {
    psi1 *= s;
    psi2 *= s;
    return *this;
  }
  friend ColumnSpinor operator+(ColumnSpinor a, const ColumnSpinor& b) noexcept { return a += b; }
  friend ColumnSpinor operator-(ColumnSpinor a, const ColumnSpinor& b) noexcept { return a -= b; }
  friend ColumnSpinor operator*(ColumnSpinor a, double s) noexcept { return a *= s; }
  friend ColumnSpinor operator*(double s, ColumnSpinor a) noexcept { return a *= s; }
  friend ColumnSpinor operator*(complex s, ColumnSpinor a) noexcept { return a *= s; }
  friend bool operator==(const ColumnSpinor&, const ColumnSpinor&) = default;
};

/// Euler-angle form of a Pauli spinor:
///   psi1 = R cos(theta/2) exp(i phi/2) exp(i chi/2)
///   psi2 = R i sin(theta/2) exp(-i phi/2) exp(i chi/2)
/// theta in [0, pi], phi in (-pi, pi], chi in (-2pi, 2pi]. chi needs the
/// doubled range to cover both signs of the spinor.
struct EulerAngles {
  double theta = 0.0;
  double phi = 0.0;
  double chi = 0.0;
  double R = 1.0;
};

class IdealSpinor {
 public:
  /// Zero-amplitude Pauli spinor (degenerate).
  IdealSpinor();
  /// `rotor` must be even and satisfy U U~ = 1 within 1e-10; R >= 0.
  IdealSpinor(Signature algebra, double amplitude, const Multivector& rotor);

  [[nodiscard]] static IdealSpinor degenerate(Signature algebra);

  [[nodiscard]] Signature algebra() const noexcept { return rotor_.signature(); }
  [[nodiscard]] double amplitude() const noexcept { return amplitude_; }
  [[nodiscard]] double density() const noexcept { return amplitude_ * amplitude_; }
  [[nodiscard]] const Multivector& rotor() const noexcept { return rotor_; }
  [[nodiscard]] Multivector idempotent() const;
  /// R = 0 points carry U = 1 by convention; every Bohm field is singular there.
  [[nodiscard]] bool is_degenerate() const noexcept { return degenerate_; }

  /// g0, g1 (Cl(0,1)) or g0..g3 (Cl(3,0)); unused entries are zero.
  [[nodiscard]] std::array<double, 4> g() const noexcept;

  /// Phi_L = R U eps.
  [[nodiscard]] Multivector element() const;
  /// Phi_R = R eps U~: the conjugate of phi_L with eps kept as is, since the
  /// Clifford conjugate of (1 + e3)/2 is the orthogonal idempotent (1 - e3)/2.
  [[nodiscard]] Multivector conjugate_element() const;

 private:
  double amplitude_ = 0.0;
  Multivector rotor_;
  bool degenerate_ = true;
};

struct CliffordDensityElement {
  Signature algebra;
  double rho = 0.0;
  /// Phi_L conj(Phi_L).
  Multivector body;
};

/// Spin in both normalizations: unit axis a and s = U e3 U~ / 2 (|s| = 1/2).
struct SpinVector {
  Vec3 a;
  Multivector s;
};

/// 1 for Cl(0,1), (1 + e3)/2 for Cl(3,0).
[[nodiscard]] Multivector primitive_idempotent(Signature sig);

[[nodiscard]] IdealSpinor from_wavefunction(complex psi);
[[nodiscard]] IdealSpinor from_components(complex psi1, complex psi2);
[[nodiscard]] inline IdealSpinor from_components(const ColumnSpinor& psi) {
  return from_components(psi.psi1, psi.psi2);
}
[[nodiscard]] IdealSpinor from_euler(const EulerAngles& angles);

[[nodiscard]] complex to_wavefunction(const IdealSpinor& phi);
[[nodiscard]] ColumnSpinor to_components(const IdealSpinor& phi);
/// Inverse Euler map; at theta in {0, pi} the gauge phi = 0 is returned.
[[nodiscard]] EulerAngles to_euler(const IdealSpinor& phi);
[[nodiscard]] EulerAngles to_euler(const ColumnSpinor& psi);
[[nodiscard]] ColumnSpinor euler_column(const EulerAngles& angles);

[[nodiscard]] CliffordDensityElement cde(const IdealSpinor& phi);

/// Spin axis from the g-coefficients. Throws std::domain_error for Cl(0,1).
[[nodiscard]] SpinVector spin_vector(const IdealSpinor& phi);
/// The same axis from the column form: a = (2 Re psi1* psi2, 2 Im psi1* psi2, |psi1|^2 - |psi2|^2) / rho.
[[nodiscard]] Vec3 spin_axis(const ColumnSpinor& psi);

/// S = i s with i = e123.
[[nodiscard]] Multivector spin_bivector(const Multivector& s);

/// Global phase on the ideal: U exp(e lambda) in Cl(0,1), Phi_L exp(e12 lambda) in Cl(3,0).
[[nodiscard]] IdealSpinor phase_rotate(const IdealSpinor& phi, double lambda);

}  // namespace cliffqm
