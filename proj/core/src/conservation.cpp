// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cliffqm/calculus.hpp"

namespace cliffqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const Vec3 kNaNVec{kNaN, kNaN, kNaN};

void require_frame(std::size_t size, std::size_t k) {
  if (size < 3 || k < 1 || k + 2 > size) {
    throw std::out_of_range("residuals need an interior frame with neighbours on both sides");
  }
}

void require_mass(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
}

template <class V, class F>
SnapshotSeries<V> window(const SnapshotSeries<IdealSpinor>& phi, std::size_t k, F&& fn) {
  SnapshotSeries<V> out;
  for (std::size_t j = k - 1; j <= k + 1; ++j) out.push_back(phi.time(j), fn(phi[j]));
  return out;
}

// Convective part (P . grad) s / m and the spin-transport torque field.
struct SpinTerms {
  GridField<Vec3> s;
  GridField<Vec3> ds_dt;
  GridField<Vec3> convective;
  GridField<Vec3> rhs;
  std::vector<bool> mask;
};

SpinTerms spin_terms(const SnapshotSeries<IdealSpinor>& phi, std::size_t k, double mass) {
  require_frame(phi.size(), k);
  require_mass(mass);
  if (!(phi[k][0].algebra() == kPauli)) throw std::domain_error("spin transport needs Cl(3,0)");
  const Grid& g = phi.grid();
  const SnapshotSeries<Vec3> s = window<Vec3>(phi, k, [](const GridField<IdealSpinor>& f) { return spin_field(f); });
  const GridField<Vec3> P = bohm_momentum(phi[k]);
  const GridField<double> rho = density(phi[k]);
  const GridField<double> log_rho =
      map_field(rho, [](double r) { return std::log(std::max(r, std::numeric_limits<double>::min())); });

  SpinTerms t{s[1], time_derivative(s, 1), GridField<Vec3>(g, Vec3{}), laplacian(s[1]), node_mask(rho)};
  for (int a = 0; a < g.dim(); ++a) {
    const GridField<Vec3> ds = partial(s[1], a);
    const GridField<double> dl = partial(log_rho, a);
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t p = 0; p < g.size(); ++p) {
      t.convective[p] += ds[p] * (P[p][ua] / mass);
      t.rhs[p] += ds[p] * dl[p];
    }
  }
  for (std::size_t p = 0; p < g.size(); ++p) t.rhs[p] = cross(t.s[p], t.rhs[p]) / mass;
  return t;
}

}  // namespace

GridField<double> qhj_residual(const GridField<double>& energy, const GridField<Vec3>& momentum,
                               const GridField<double>& potential_q,
                               const std::optional<GridField<double>>& potential, double mass) {
  require_mass(mass);
  GridField<double> out(energy.grid(), 0.0);
  for (std::size_t p = 0; p < out.size(); ++p) {
    const double v = potential ? (*potential)[p] : 0.0;
    out[p] = energy[p] - dot(momentum[p], momentum[p]) / (2.0 * mass) - potential_q[p] - v;
  }
  return out;
}

GridField<double> continuity_residual(const SnapshotSeries<IdealSpinor>& phi, std::size_t k, double mass) {
  require_frame(phi.size(), k);
  require_mass(mass);
  const SnapshotSeries<double> rho = window<double>(phi, k, [](const GridField<IdealSpinor>& f) { return density(f); });
  const GridField<Vec3> P = bohm_momentum(phi[k]);
  const std::vector<bool> mask = node_mask(rho[1]);
  GridField<Vec3> flux(phi.grid(), Vec3{});
  for (std::size_t p = 0; p < flux.size(); ++p) flux[p] = mask[p] ? Vec3{} : P[p] * (rho[1][p] / mass);
  GridField<double> out = time_derivative(rho, 1);
  const GridField<double> div = divergence(flux);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = mask[p] ? kNaN : out[p] + div[p];
  return out;
}

GridField<Vec3> spin_transport_residual(const SnapshotSeries<IdealSpinor>& phi, std::size_t k, double mass) {
  const SpinTerms t = spin_terms(phi, k, mass);
  GridField<Vec3> out(phi.grid(), Vec3{});
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = t.mask[p] ? kNaNVec : t.ds_dt[p] + t.convective[p] - t.rhs[p];
  }
  return out;
}

GridField<double> spin_norm_drift(const SnapshotSeries<IdealSpinor>& phi, std::size_t k, double mass) {
  const SpinTerms t = spin_terms(phi, k, mass);
  GridField<double> out(phi.grid(), 0.0);
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = t.mask[p] ? kNaN : 2.0 * dot(t.s[p], t.ds_dt[p] + t.convective[p]);
  }
  return out;
}

QuantumTorque quantum_torque(const SnapshotSeries<ColumnSpinor>& psi, std::size_t k, double mass,
                             const std::optional<GridField<double>>& potential) {
  require_frame(psi.size(), k);
  require_mass(mass);
  const Grid& g = psi.grid();
  SnapshotSeries<Vec3> P;
  for (std::size_t j = k - 1; j <= k + 1; ++j) P.push_back(psi.time(j), bohm_momentum(to_ideal_field(psi[j])));
  const GridField<IdealSpinor> phi = to_ideal_field(psi[k]);
  const GridField<double> p2 = map_field(P[1], [mass](const Vec3& v) { return dot(v, v) / (2.0 * mass); });
  const GridField<Vec3> grad_p2 = gradient(p2);
  const GridField<Vec3> grad_q = gradient(quantum_potential(phi, mass).Q);
  const GridField<Vec3> grad_v = potential ? gradient(*potential) : GridField<Vec3>(g, Vec3{});

  const EulerGradients e = euler_gradients(psi[k]);
  const EulerRates r = euler_rates(psi, k);
  const GridField<Vec3> grad_cos = gradient(e.cos_theta);
  const std::vector<bool> mask = node_mask(density(phi));

  QuantumTorque out{time_derivative(P, 1), grad_q, GridField<Vec3>(g, Vec3{}), GridField<Vec3>(g, Vec3{})};
  for (std::size_t p = 0; p < g.size(); ++p) {
    out.dP_dt[p] += grad_p2[p];
    if (mask[p] || e.pole[p]) {
      out.torque[p] = kNaNVec;
      out.residual[p] = kNaNVec;
      continue;
    }
    out.torque[p] = (e.grad_phi[p] * r.d_cos_theta[p] - grad_cos[p] * r.d_phi[p]) * 0.5;
    out.residual[p] = out.dP_dt[p] + grad_q[p] + grad_v[p] - out.torque[p];
  }
  return out;
}

}  // namespace cliffqm
