// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cliffqm/calculus.hpp"

namespace cliffqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const Vec3 kNaNVec{kNaN, kNaN, kNaN};

void require_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be positive");
}

double max_density(const GridField<double>& rho) {
  double m = 0.0;
  for (double r : rho) m = std::max(m, r);
  return m;
}

template <class V>
void apply_mask(GridField<V>& f, const std::vector<bool>& mask, const V& blank) {
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (mask[p]) f[p] = blank;
  }
}

Multivector nan_multivector(Signature sig) {
  Multivector m(sig);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = kNaN;
  return m;
}

GridField<complex> first_component(const GridField<ColumnSpinor>& psi) {
  return map_field(psi, [](const ColumnSpinor& c) { return c.psi1; });
}

GridField<complex> second_component(const GridField<ColumnSpinor>& psi) {
  return map_field(psi, [](const ColumnSpinor& c) { return c.psi2; });
}

GridField<double> column_density(const GridField<ColumnSpinor>& psi) {
  return map_field(psi, [](const ColumnSpinor& c) { return c.density(); });
}

// d arg(z) / dx_axis from wrapped phase differences.
GridField<double> phase_partial(const GridField<complex>& z, int axis) {
  const Grid& g = z.grid();
  GridField<double> out(g, 0.0);
  if (axis >= g.dim()) return out;
  const double h = g.spacing(axis);
  const std::size_t n = g.count(axis);
  const std::size_t s = g.stride(axis);
  auto darg = [](complex a, complex b) { return std::arg(b * std::conj(a)); };
  for (std::size_t p = 0; p < z.size(); ++p) {
    const std::size_t c = g.coords(p)[static_cast<std::size_t>(axis)];
    if (g.boundary() == Boundary::periodic || (c > 0 && c + 1 < n)) {
      const std::size_t im = c == 0 ? p + (n - 1) * s : p - s;
      const std::size_t ip = c + 1 == n ? p - (n - 1) * s : p + s;
      out[p] = darg(z[im], z[ip]) / (2.0 * h);
    } else {
      const bool low = c == 0;
      auto at = [&](std::size_t k) { return low ? z[p + k * s] : z[p - k * s]; };
      const double d1 = darg(at(0), at(1));
      const double d2 = d1 + darg(at(1), at(2));
      const double d = (4.0 * d1 - d2) / (2.0 * h);
      out[p] = low ? d : -d;
    }
  }
  return out;
}

GridField<Vec3> phase_gradient(const GridField<complex>& z) {
  GridField<Vec3> out(z.grid(), Vec3{});
  for (int a = 0; a < z.grid().dim(); ++a) {
    const GridField<double> d = phase_partial(z, a);
    for (std::size_t p = 0; p < z.size(); ++p) out[p][static_cast<std::size_t>(a)] = d[p];
  }
  return out;
}

GridField<double> phase_rate(const SnapshotSeries<complex>& z, std::size_t k) {
  if (z.size() < 3 || k < 1 || k + 2 > z.size()) {
    throw std::out_of_range("time derivative needs an interior frame");
  }
  const double dt = z.dt();
  return zip_fields(z[k - 1], z[k + 1],
                    [dt](complex a, complex b) { return std::arg(b * std::conj(a)) / (2.0 * dt); });
}

SnapshotSeries<complex> component_series(const SnapshotSeries<ColumnSpinor>& psi, int which) {
  SnapshotSeries<complex> out;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    out.push_back(psi.time(k), which == 0 ? first_component(psi[k]) : second_component(psi[k]));
  }
  return out;
}

// Per-point weights of the two components, with the pole gauge phi = 0:
// an absent component inherits the phase rate of the present one.
struct ComponentWeights {
  std::vector<bool> first_absent;
  std::vector<bool> second_absent;
};

ComponentWeights absent_components(const GridField<ColumnSpinor>& psi) {
  const GridField<double> rho = column_density(psi);
  const double floor = kNodeThreshold * max_density(rho);
  ComponentWeights w{std::vector<bool>(psi.size()), std::vector<bool>(psi.size())};
  for (std::size_t p = 0; p < psi.size(); ++p) {
    w.first_absent[p] = std::norm(psi[p].psi1) < floor;
    w.second_absent[p] = std::norm(psi[p].psi2) < floor;
  }
  return w;
}

template <class V>
void gauge_absent(V& d1, V& d2, bool first_absent, bool second_absent) {
  if (first_absent && !second_absent) d1 = d2;
  if (second_absent && !first_absent) d2 = d1;
}

GridField<Multivector> product_field(const GridField<Multivector>& a, const GridField<Multivector>& b) {
  return zip_fields(a, b, [](const Multivector& x, const Multivector& y) { return x * y; });
}

GridField<Multivector> conjugate_field(const GridField<Multivector>& a) {
  return map_field(a, [](const Multivector& x) { return clifford_conjugate(x); });
}

double non_bivector_defect(const Multivector& m) {
  const int keep = m.signature() == kSchrodinger ? 1 : 2;
  double d = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (blade_grade(m.signature(), i) != keep) d = std::max(d, std::fabs(m[i]));
  }
  return d;
}

// <-e Omega / 2>_0 or -<Omega S>_0.
double momentum_component(const Multivector& omega, const Multivector& S) {
  if (omega.signature() == kSchrodinger) return 0.5 * omega[1];
  return -scalar_part(omega * S);
}

}  // namespace

GridField<IdealSpinor> to_ideal_field(const GridField<complex>& psi) {
  return map_field(psi, [](complex z) { return from_wavefunction(z); });
}

GridField<IdealSpinor> to_ideal_field(const GridField<ColumnSpinor>& psi) {
  return map_field(psi, [](const ColumnSpinor& c) { return from_components(c); });
}

SnapshotSeries<IdealSpinor> to_ideal_series(const SnapshotSeries<complex>& psi) {
  return map_series(psi, [](const GridField<complex>& f) { return to_ideal_field(f); });
}

SnapshotSeries<IdealSpinor> to_ideal_series(const SnapshotSeries<ColumnSpinor>& psi) {
  return map_series(psi, [](const GridField<ColumnSpinor>& f) { return to_ideal_field(f); });
}

GridField<ColumnSpinor> to_column_field(const GridField<IdealSpinor>& phi) {
  return map_field(phi, [](const IdealSpinor& s) {
    if (s.algebra() == kSchrodinger) return ColumnSpinor{to_wavefunction(s), complex{}};
    return to_components(s);
  });
}

GridField<double> density(const GridField<IdealSpinor>& phi) {
  return map_field(phi, [](const IdealSpinor& s) { return s.density(); });
}

GridField<Multivector> rotor_field(const GridField<IdealSpinor>& phi) {
  return map_field(phi, [](const IdealSpinor& s) { return s.rotor(); });
}

SnapshotSeries<Multivector> rotor_series(const SnapshotSeries<IdealSpinor>& phi) {
  return map_series(phi, [](const GridField<IdealSpinor>& f) { return rotor_field(f); });
}

GridField<Vec3> spin_field(const GridField<IdealSpinor>& phi) {
  return map_field(phi, [](const IdealSpinor& s) { return spin_vector(s).a * 0.5; });
}

GridField<Multivector> spin_bivector_field(const GridField<IdealSpinor>& phi) {
  return map_field(phi, [](const IdealSpinor& s) { return spin_bivector(spin_vector(s).s); });
}

std::vector<bool> node_mask(const GridField<double>& rho, double threshold) {
  const double floor = threshold * max_density(rho);
  std::vector<bool> mask(rho.size());
  for (std::size_t p = 0; p < rho.size(); ++p) mask[p] = !(rho[p] >= floor) || rho[p] == 0.0;
  return mask;
}

OmegaField omega_fields(const GridField<Multivector>& rotor) {
  OmegaField out;
  const GridField<Multivector> conj = conjugate_field(rotor);
  for (int a = 0; a < rotor.grid().dim(); ++a) {
    GridField<Multivector> om = product_field(partial(rotor, a), conj);
    for (Multivector& m : om.values()) m *= 2.0;
    GridField<Multivector> alt = product_field(rotor, partial(conj, a));
    for (Multivector& m : alt.values()) m *= -2.0;
    for (const Multivector& m : om) out.purity_defect = std::max(out.purity_defect, non_bivector_defect(m));
    out.spatial.push_back(std::move(om));
    out.alternate.push_back(std::move(alt));
  }
  return out;
}

OmegaField omega_fields(const SnapshotSeries<Multivector>& rotor, std::size_t k) {
  OmegaField out = omega_fields(rotor[k]);
  GridField<Multivector> om = product_field(time_derivative(rotor, k), conjugate_field(rotor[k]));
  for (Multivector& m : om.values()) {
    m *= 2.0;
    out.purity_defect = std::max(out.purity_defect, non_bivector_defect(m));
  }
  out.temporal = std::move(om);
  return out;
}

GridField<Vec3> bohm_momentum(const GridField<IdealSpinor>& phi) {
  const OmegaField omega = omega_fields(rotor_field(phi));
  const bool pauli = phi[0].algebra() == kPauli;
  const std::optional<GridField<Multivector>> S =
      pauli ? std::optional(spin_bivector_field(phi)) : std::nullopt;
  GridField<Vec3> out(phi.grid(), Vec3{});
  for (std::size_t a = 0; a < omega.spatial.size(); ++a) {
    for (std::size_t p = 0; p < phi.size(); ++p) {
      out[p][a] = momentum_component(omega.spatial[a][p], pauli ? (*S)[p] : omega.spatial[a][p]);
    }
  }
  apply_mask(out, node_mask(density(phi)), kNaNVec);
  return out;
}

MomentumDefiningForm momentum_defining_form(const GridField<IdealSpinor>& phi) {
  const Signature sig = phi[0].algebra();
  const GridField<Multivector> left = map_field(phi, [](const IdealSpinor& s) { return s.element(); });
  const GridField<Multivector> right =
      map_field(phi, [](const IdealSpinor& s) { return s.conjugate_element(); });
  const GridField<double> rho = density(phi);
  const std::vector<bool> mask = node_mask(rho);
  const double alpha = sig == kSchrodinger ? 0.5 : 1.0;
  const Multivector i_alpha = central_unit(sig) * (-alpha);

  MomentumDefiningForm out{GridField<Vec3>(phi.grid(), Vec3{}), {}};
  for (int a = 0; a < phi.grid().dim(); ++a) {
    const GridField<Multivector> dl = partial(left, a);
    const GridField<Multivector> dr = partial(right, a);
    std::vector<Multivector> rest;
    rest.reserve(phi.size());
    for (std::size_t p = 0; p < phi.size(); ++p) {
      Multivector m = i_alpha * (dl[p] * right[p] - left[p] * dr[p]);
      if (mask[p]) {
        out.momentum[p][static_cast<std::size_t>(a)] = kNaN;
        rest.push_back(nan_multivector(sig));
        continue;
      }
      m *= 1.0 / rho[p];
      out.momentum[p][static_cast<std::size_t>(a)] = m[0];
      m[0] = 0.0;
      rest.push_back(m);
    }
    out.remainder.emplace_back(phi.grid(), std::move(rest));
  }
  return out;
}

GridField<Vec3> momentum_weighted_mean(const GridField<ColumnSpinor>& psi) {
  const GridField<complex> z1 = first_component(psi);
  const GridField<complex> z2 = second_component(psi);
  const GridField<Vec3> p1 = phase_gradient(z1);
  const GridField<Vec3> p2 = phase_gradient(z2);
  const GridField<double> rho = column_density(psi);
  const std::vector<bool> mask = node_mask(rho);
  GridField<Vec3> out(psi.grid(), Vec3{});
  for (std::size_t p = 0; p < psi.size(); ++p) {
    out[p] = mask[p] ? kNaNVec : (p1[p] * std::norm(z1[p]) + p2[p] * std::norm(z2[p])) / rho[p];
  }
  return out;
}

EulerGradients euler_gradients(const GridField<ColumnSpinor>& psi) {
  const Grid& g = psi.grid();
  GridField<Vec3> d1 = phase_gradient(first_component(psi));
  GridField<Vec3> d2 = phase_gradient(second_component(psi));
  const ComponentWeights absent = absent_components(psi);

  GridField<double> theta = map_field(psi, [](const ColumnSpinor& c) {
    return 2.0 * std::atan2(std::abs(c.psi2), std::abs(c.psi1));
  });
  GridField<double> cos_theta = map_field(psi, [](const ColumnSpinor& c) {
    const double rho = c.density();
    return rho > 0.0 ? (std::norm(c.psi1) - std::norm(c.psi2)) / rho : 1.0;
  });

  EulerGradients out{theta, cos_theta, gradient(theta), GridField<Vec3>(g, Vec3{}),
                     GridField<Vec3>(g, Vec3{}), std::vector<bool>(psi.size())};
  for (std::size_t p = 0; p < psi.size(); ++p) {
    gauge_absent(d1[p], d2[p], absent.first_absent[p], absent.second_absent[p]);
    // alpha1 = (phi + chi)/2, alpha2 = (chi - phi)/2
    out.grad_phi[p] = d1[p] - d2[p];
    out.grad_chi[p] = d1[p] + d2[p];
    const bool both = !absent.first_absent[p] && !absent.second_absent[p];
    out.pole[p] = both && std::sin(theta[p]) < kPoleThreshold;
  }
  return out;
}

GridField<Vec3> momentum_euler_form(const GridField<ColumnSpinor>& psi) {
  const EulerGradients e = euler_gradients(psi);
  const std::vector<bool> mask = node_mask(column_density(psi));
  GridField<Vec3> out(psi.grid(), Vec3{});
  for (std::size_t p = 0; p < psi.size(); ++p) {
    out[p] = mask[p] ? kNaNVec : (e.grad_chi[p] + e.grad_phi[p] * e.cos_theta[p]) * 0.5;
  }
  return out;
}

GridField<double> bohm_energy(const SnapshotSeries<IdealSpinor>& phi, std::size_t k) {
  const OmegaField omega = omega_fields(rotor_series(phi), k);
  const GridField<Multivector>& om = *omega.temporal;
  const bool pauli = phi[k][0].algebra() == kPauli;
  GridField<double> out(phi.grid(), 0.0);
  if (pauli) {
    const GridField<Multivector> S = spin_bivector_field(phi[k]);
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = scalar_part(om[p] * S[p]);
  } else {
    // <e Omega_t / 2>_0 with Omega_t = w e.
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = -0.5 * om[p][1];
  }
  apply_mask(out, node_mask(density(phi[k])), kNaN);
  return out;
}

GridField<double> energy_weighted_mean(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k) {
  const GridField<double> e1 = phase_rate(component_series(psi, 0), k);
  const GridField<double> e2 = phase_rate(component_series(psi, 1), k);
  const GridField<double> rho = column_density(psi[k]);
  const std::vector<bool> mask = node_mask(rho);
  GridField<double> out(psi.grid(), 0.0);
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = mask[p] ? kNaN
                     : -(e1[p] * std::norm(psi[k][p].psi1) + e2[p] * std::norm(psi[k][p].psi2)) / rho[p];
  }
  return out;
}

EulerRates euler_rates(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k) {
  GridField<double> r1 = phase_rate(component_series(psi, 0), k);
  GridField<double> r2 = phase_rate(component_series(psi, 1), k);
  const ComponentWeights absent = absent_components(psi[k]);
  auto cos_theta = [](const GridField<ColumnSpinor>& f) {
    return map_field(f, [](const ColumnSpinor& c) {
      const double rho = c.density();
      return rho > 0.0 ? (std::norm(c.psi1) - std::norm(c.psi2)) / rho : 1.0;
    });
  };
  SnapshotSeries<double> cos_series;
  for (std::size_t j = k - 1; j <= k + 1; ++j) cos_series.push_back(psi.time(j), cos_theta(psi[j]));

  EulerRates out{time_derivative(cos_series, 1), GridField<double>(psi.grid(), 0.0),
                 GridField<double>(psi.grid(), 0.0)};
  for (std::size_t p = 0; p < psi.grid().size(); ++p) {
    gauge_absent(r1[p], r2[p], absent.first_absent[p], absent.second_absent[p]);
    out.d_phi[p] = r1[p] - r2[p];
    out.d_chi[p] = r1[p] + r2[p];
  }
  return out;
}

GridField<double> energy_euler_form(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k) {
  const EulerRates r = euler_rates(psi, k);
  const std::vector<bool> mask = node_mask(column_density(psi[k]));
  GridField<double> out(psi.grid(), 0.0);
  for (std::size_t p = 0; p < out.size(); ++p) {
    const ColumnSpinor& c = psi[k][p];
    const double cos_theta = mask[p] ? 0.0 : (std::norm(c.psi1) - std::norm(c.psi2)) / c.density();
    out[p] = mask[p] ? kNaN : -0.5 * (r.d_chi[p] + cos_theta * r.d_phi[p]);
  }
  return out;
}

WField w_field(const GridField<double>& rho, const GridField<Multivector>& spin_bivector) {
  const Grid& g = rho.grid();
  const std::vector<bool> mask = node_mask(rho);
  const GridField<Multivector> rho_s =
      zip_fields(rho, spin_bivector, [](double r, const Multivector& s) { return s * r; });
  WField out{{}, GridField<Multivector>(g, Multivector(kPauli))};
  for (int a = 0; a < g.dim(); ++a) {
    GridField<Multivector> w = partial(rho_s, a);
    const Multivector ea = Multivector::blade(kPauli, static_cast<std::size_t>(a + 1));
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (mask[p]) {
        w[p] = nan_multivector(kPauli);
      } else {
        w[p] *= 1.0 / rho[p];
      }
      out.assembled[p] += ea * w[p];
    }
    out.axis.push_back(std::move(w));
  }
  return out;
}

QuantumPotential quantum_potential(const GridField<IdealSpinor>& phi, double mass) {
  require_mass(mass);
  const Grid& g = phi.grid();
  const GridField<double> rho = density(phi);
  const std::vector<bool> mask = node_mask(rho);
  const GridField<double> amp = map_field(phi, [](const IdealSpinor& s) { return s.amplitude(); });
  const GridField<double> log_rho =
      map_field(rho, [](double r) { return std::log(std::max(r, std::numeric_limits<double>::min())); });
  const GridField<double> lap_log = laplacian(log_rho);
  const GridField<Vec3> grad_log = gradient(log_rho);
  const GridField<double> lap_amp = laplacian(amp);

  QuantumPotential q{GridField<double>(g, 0.0), GridField<double>(g, 0.0), GridField<double>(g, 0.0),
                     GridField<double>(g, 0.0)};
  for (std::size_t p = 0; p < phi.size(); ++p) {
    q.Q[p] = -(2.0 * lap_log[p] + dot(grad_log[p], grad_log[p])) / (8.0 * mass);
    q.Q1[p] = -lap_amp[p] / (2.0 * mass * amp[p]);
  }

  if (phi[0].algebra() == kPauli) {
    const GridField<Vec3> s = spin_field(phi);
    const GridField<Vec3> lap_s = laplacian(s);
    for (std::size_t p = 0; p < phi.size(); ++p) q.Q[p] -= dot(s[p], lap_s[p]) / (2.0 * mass);

    const EulerGradients e = euler_gradients(to_column_field(phi));
    for (std::size_t p = 0; p < phi.size(); ++p) {
      const double sin2 = 1.0 - e.cos_theta[p] * e.cos_theta[p];
      q.Q2[p] = e.pole[p] ? kNaN
                          : (dot(e.grad_theta[p], e.grad_theta[p]) + sin2 * dot(e.grad_phi[p], e.grad_phi[p])) /
                                (8.0 * mass);
    }

    const GridField<Multivector> S = spin_bivector_field(phi);
    const WField w = w_field(rho, S);
    for (int a = 0; a < g.dim(); ++a) {
      const GridField<Multivector> dw = partial(w.axis[static_cast<std::size_t>(a)], a);
      for (std::size_t p = 0; p < phi.size(); ++p) {
        const Multivector& wa = w.axis[static_cast<std::size_t>(a)][p];
        q.Q_w[p] += scalar_part(dw[p] * S[p]) / mass + scalar_part(wa * wa) / (2.0 * mass);
      }
    }
  } else {
    q.Q_w = q.Q;
  }

  for (GridField<double>* f : {&q.Q, &q.Q1, &q.Q2, &q.Q_w}) apply_mask(*f, mask, kNaN);
  return q;
}

PauliCurrent pauli_current(const GridField<IdealSpinor>& phi, double mass) {
  require_mass(mass);
  const Grid& g = phi.grid();
  const GridField<double> rho = density(phi);
  const std::vector<bool> mask = node_mask(rho);
  const GridField<Vec3> P = bohm_momentum(phi);

  PauliCurrent out{GridField<Vec3>(g, Vec3{}), GridField<Vec3>(g, Vec3{}), GridField<Vec3>(g, Vec3{})};
  for (std::size_t p = 0; p < phi.size(); ++p) out.J_conv[p] = mask[p] ? Vec3{} : P[p] * (rho[p] / mass);
  if (phi[0].algebra() == kPauli) {
    const GridField<Vec3> rho_s =
        zip_fields(rho, spin_field(phi), [](double r, const Vec3& s) { return s * r; });
    out.J_rot = map_field(curl(rho_s), [mass](const Vec3& c) { return c / mass; });
  }
  for (std::size_t p = 0; p < phi.size(); ++p) {
    out.v[p] = mask[p] ? kNaNVec : (out.J_conv[p] + out.J_rot[p]) / rho[p];
  }
  return out;
}

double expectation(const Multivector& b, const CliffordDensityElement& rho_c) {
  return trace(b * rho_c.body);
}

}  // namespace cliffqm
