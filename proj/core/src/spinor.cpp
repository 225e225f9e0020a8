// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/spinor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffqm {

namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kPoleTolerance = 1e-14;

// Pauli bivector slots in canonical order.
constexpr std::size_t kE23 = 4;
constexpr std::size_t kE13 = 5;
constexpr std::size_t kE12 = 6;

bool is_even(const Multivector& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (blade_grade(u.signature(), i) % 2 != 0 && u[i] != 0.0) return false;
  }
  return true;
}

// Maps an angle into (-period/2, period/2].
double wrap(double angle, double period) {
  double r = std::remainder(angle, period);
  if (r <= -period / 2) r += period;
  return r;
}

}  // namespace

IdealSpinor::IdealSpinor() : IdealSpinor(degenerate(kPauli)) {}

IdealSpinor::IdealSpinor(Signature algebra, double amplitude, const Multivector& rotor)
    : amplitude_(amplitude), rotor_(rotor), degenerate_(amplitude == 0.0) {
  if (!(rotor.signature() == algebra)) throw std::invalid_argument("rotor signature mismatch");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("spinor amplitude must be finite and non-negative");
  }
  if (algebra == kPauli && !is_even(rotor)) throw std::invalid_argument("rotor U must be an even element");
  const Multivector uu = rotor * clifford_conjugate(rotor);
  if (max_abs_diff(uu, Multivector::scalar(algebra, 1.0)) > kUnitTolerance) {
    throw std::invalid_argument("rotor U must satisfy U U~ = 1");
  }
}

IdealSpinor IdealSpinor::degenerate(Signature algebra) {
  IdealSpinor phi(algebra, 1.0, Multivector::scalar(algebra, 1.0));
  phi.amplitude_ = 0.0;
  phi.degenerate_ = true;
  return phi;
}

Multivector IdealSpinor::idempotent() const { return primitive_idempotent(algebra()); }

std::array<double, 4> IdealSpinor::g() const noexcept {
  if (algebra() == kSchrodinger) return {rotor_[0], rotor_[1], 0.0, 0.0};
  return {rotor_[0], rotor_[kE23], rotor_[kE13], rotor_[kE12]};
}

Multivector IdealSpinor::element() const { return amplitude_ * (rotor_ * idempotent()); }

Multivector IdealSpinor::conjugate_element() const {
  return amplitude_ * (idempotent() * clifford_conjugate(rotor_));
}

Multivector primitive_idempotent(Signature sig) {
  if (sig == kSchrodinger) return Multivector::scalar(sig, 1.0);
  return Multivector(kPauli, {0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0});
}

IdealSpinor from_wavefunction(complex psi) {
  const double r = std::abs(psi);
  if (r == 0.0) return IdealSpinor::degenerate(kSchrodinger);
  return IdealSpinor(kSchrodinger, r, Multivector(kSchrodinger, {psi.real() / r, psi.imag() / r}));
}

IdealSpinor from_components(complex psi1, complex psi2) {
  const double r = std::hypot(std::abs(psi1), std::abs(psi2));
  if (r == 0.0) return IdealSpinor::degenerate(kPauli);
  // psi1 = R (g0 + i g3), psi2 = R (g2 + i g1): the first column of rep(U eps).
  Multivector u(kPauli);
  u[0] = psi1.real() / r;
  u[kE23] = psi2.imag() / r;
  u[kE13] = psi2.real() / r;
  u[kE12] = psi1.imag() / r;
  return IdealSpinor(kPauli, r, u);
}

ColumnSpinor euler_column(const EulerAngles& e) {
  const complex phase = std::polar(1.0, e.chi / 2);
  const complex i{0.0, 1.0};
  return {e.R * std::cos(e.theta / 2) * std::polar(1.0, e.phi / 2) * phase,
          e.R * i * std::sin(e.theta / 2) * std::polar(1.0, -e.phi / 2) * phase};
}

IdealSpinor from_euler(const EulerAngles& angles) { return from_components(euler_column(angles)); }

complex to_wavefunction(const IdealSpinor& phi) {
  if (!(phi.algebra() == kSchrodinger)) throw std::domain_error("to_wavefunction needs Cl(0,1)");
  const auto g = phi.g();
  return phi.amplitude() * complex(g[0], g[1]);
}

ColumnSpinor to_components(const IdealSpinor& phi) {
  if (!(phi.algebra() == kPauli)) throw std::domain_error("to_components needs Cl(3,0)");
  const auto g = phi.g();
  const double r = phi.amplitude();
  return {r * complex(g[0], g[3]), r * complex(g[2], g[1])};
}

EulerAngles to_euler(const ColumnSpinor& psi) {
  using std::numbers::pi;
  const double m1 = std::abs(psi.psi1);
  const double m2 = std::abs(psi.psi2);
  const double r = std::hypot(m1, m2);
  if (r == 0.0) return {0.0, 0.0, 0.0, 0.0};

  EulerAngles e;
  e.R = r;
  e.theta = 2.0 * std::atan2(m2, m1);
  // psi1 phase = (phi + chi)/2, psi2 phase = pi/2 + (chi - phi)/2
  const double alpha1 = std::arg(psi.psi1);
  const double alpha2 = std::arg(psi.psi2) - pi / 2;
  if (m2 <= kPoleTolerance * r) {
    e.phi = 0.0;
    e.chi = wrap(2.0 * alpha1, 4.0 * pi);
  } else if (m1 <= kPoleTolerance * r) {
    e.phi = 0.0;
    e.chi = wrap(2.0 * alpha2, 4.0 * pi);
  } else {
    double phi = alpha1 - alpha2;
    double chi = alpha1 + alpha2;
    // Shifting alpha2 by 2 pi leaves psi2 alone and moves phi, chi by -/+ 2 pi.
    const double wrapped = wrap(phi, 2.0 * pi);
    chi -= wrapped - phi;
    phi = wrapped;
    e.phi = phi;
    e.chi = wrap(chi, 4.0 * pi);
  }
  return e;
}

EulerAngles to_euler(const IdealSpinor& phi) { return to_euler(to_components(phi)); }

CliffordDensityElement cde(const IdealSpinor& phi) {
  return {phi.algebra(), phi.density(), phi.element() * phi.conjugate_element()};
}

SpinVector spin_vector(const IdealSpinor& phi) {
  if (!(phi.algebra() == kPauli)) throw std::domain_error("spin_vector needs Cl(3,0)");
  const auto [g0, g1, g2, g3] = phi.g();
  const Vec3 a{2.0 * (g0 * g2 + g1 * g3), 2.0 * (g0 * g1 - g2 * g3),
               g0 * g0 - g1 * g1 - g2 * g2 + g3 * g3};
  return {a, Multivector::vector(a * 0.5)};
}

Vec3 spin_axis(const ColumnSpinor& psi) {
  const double rho = psi.density();
  const complex c = std::conj(psi.psi1) * psi.psi2;
  return Vec3{2.0 * c.real(), 2.0 * c.imag(), std::norm(psi.psi1) - std::norm(psi.psi2)} / rho;
}

Multivector spin_bivector(const Multivector& s) { return central_unit(kPauli) * s; }

IdealSpinor phase_rotate(const IdealSpinor& phi, double lambda) {
  if (phi.is_degenerate()) return phi;
  const Signature sig = phi.algebra();
  const Multivector generator =
      sig == kSchrodinger ? central_unit(sig) : Multivector::blade(kPauli, kE12);
  return IdealSpinor(sig, phi.amplitude(), phi.rotor() * exp_unit_blade(generator, lambda));
}

}  // namespace cliffqm
