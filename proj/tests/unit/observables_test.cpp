// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/observables.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cliffqm/calculus.hpp"
#include "cliffqm/conservation.hpp"
#include "cliffqm/oracle.hpp"
#include "cliffqm/report.hpp"
#include "cliffqm/scenario.hpp"
#include "field_support.hpp"

namespace cliffqm {
namespace {

using std::numbers::pi;
using testing::fill_field;
using testing::fill_series;
using testing::max_abs_field;
using testing::minus;

const complex kI{0.0, 1.0};

Grid periodic_line(std::size_t n) { return Grid::line(0.0, 2 * pi, n, Boundary::periodic); }

// Smooth nodeless two-component texture on a periodic square.
ColumnSpinor texture(const Vec3& r, double t) {
  const double a1 = 1.4 + 0.5 * std::cos(r.x + r.y - 0.2 * t);
  const double a2 = 1.1 + 0.4 * std::sin(2 * r.y - r.x + 0.1 * t);
  const double s1 = 0.8 * std::sin(r.x) + std::cos(r.y) - 0.7 * t;
  const double s2 = 1.3 * std::cos(r.x + r.y) - 0.4 * t;
  return {std::polar(a1, s1), std::polar(a2, s2)};
}

TEST(Omega, SchrodingerPhaseRotor) {
  const std::size_t n = 64;
  const Grid g = periodic_line(n);
  const double k = 3.0, h = g.spacing(0);
  const GridField<Multivector> u = fill_field<Multivector>(
      g, [&](const Vec3& r) { return exp_unit_blade(Multivector::blade(kSchrodinger, 1), k * r.x); });
  const OmegaField om = omega_fields(u);
  ASSERT_EQ(om.spatial.size(), 1u);
  const Multivector want = Multivector::blade(kSchrodinger, 1, 2.0 * std::sin(k * h) / h);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_LE(max_abs_diff(om.spatial[0][p], want), 1e-12);
    EXPECT_LE(max_abs_diff(om.alternate[0][p], want), 1e-12);
  }
  EXPECT_LE(om.purity_defect, 1e-12);
}

TEST(Omega, PauliPhaseRotorAndConstant) {
  const Grid g = periodic_line(48);
  const double k = 2.0, h = g.spacing(0);
  const Multivector e12 = Multivector::blade(kPauli, 6);
  const OmegaField om =
      omega_fields(fill_field<Multivector>(g, [&](const Vec3& r) { return exp_unit_blade(e12, k * r.x); }));
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_LE(max_abs_diff(om.spatial[0][p], e12 * (2.0 * std::sin(k * h) / h)), 1e-12);
  }
  const Multivector u0 = from_components(complex(0.3, 0.2), complex(-0.5, 0.7)).rotor();
  const OmegaField zero = omega_fields(GridField<Multivector>(g, u0));
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_LE(max_abs(zero.spatial[0][p]), 1e-12);
}

TEST(Omega, TextureIsBivectorValuedAtSecondOrder) {
  std::vector<double> purity, alternate;
  for (std::size_t n : {32, 64, 128}) {
    const Grid g({{0, 2 * pi, n}, {0, 2 * pi, n}}, Boundary::periodic);
    const auto psi = fill_series<ColumnSpinor>(g, 0.0, 0.01, 3, texture);
    const OmegaField om = omega_fields(rotor_series(to_ideal_series(psi)), 1);
    ASSERT_TRUE(om.temporal.has_value());
    double d = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t p = 0; p < g.size(); ++p) d = std::fmax(d, max_abs_diff(om.spatial[a][p], om.alternate[a][p]));
    }
    purity.push_back(om.purity_defect);
    alternate.push_back(d);
  }
  for (const auto* e : {&purity, &alternate}) {
    for (double s : convergence_slopes(*e)) {
      EXPECT_GE(s, 1.8);
      EXPECT_LE(s, 2.2);
    }
  }
}

TEST(Momentum, PlaneWaveIsDiscreteWavenumber) {
  const Grid g = periodic_line(64);
  const double k = 3.0, h = g.spacing(0);
  const auto phi = to_ideal_field(sample(ScalarState{PlaneWave{1.0, Vec3{k, 0, 0}, 1.0}}, g, 0.0));
  const GridField<Vec3> P = bohm_momentum(phi);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(P[p].x, std::sin(k * h) / h, 1e-12);
    EXPECT_EQ(P[p].y, 0.0);
  }
}

TEST(Momentum, RealGaussianHasNone) {
  const Grid g = Grid::line(-8, 8, 101, Boundary::clamped);
  const auto phi = to_ideal_field(sample(ScalarState{GaussianPacket{1.0, Vec3{}, Vec3{}, 1.0}}, g, 0.0));
  EXPECT_LE(max_abs_field(bohm_momentum(phi)), 1e-12);
}

TEST(Momentum, TwoMomentumSuperposition) {
  const double k1 = 1.0, k2 = 3.0;
  std::vector<double> err;
  for (std::size_t n : {64, 128, 256}) {
    const Grid g = periodic_line(n);
    const auto psi = fill_field<ColumnSpinor>(g, [&](const Vec3& r) {
      return ColumnSpinor{std::polar(std::sqrt(0.5), k1 * r.x), std::polar(std::sqrt(0.5), k2 * r.x)};
    });
    const GridField<Vec3> P = bohm_momentum(to_ideal_field(psi));
    const GridField<Vec3> mp = momentum_weighted_mean(psi);
    const GridField<Vec3> t0j = oracle::momentum_density(psi);
    double e = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
      EXPECT_NEAR(mp[p].x, 2.0, 1e-12);
      EXPECT_NEAR(t0j[p].x / psi[p].density(), P[p].x, 1e-10);
      e = std::fmax(e, std::abs(P[p].x - 2.0));
    }
    err.push_back(e);
  }
  for (double s : convergence_slopes(err)) EXPECT_NEAR(s, 2.0, 0.2);
}

TEST(Momentum, TextureFormsAgreeAtSecondOrder) {
  std::vector<double> mp_err, oracle_err, def_err;
  for (std::size_t n : {32, 64, 128}) {
    const Grid g({{0, 2 * pi, n}, {0, 2 * pi, n}}, Boundary::periodic);
    const auto psi = fill_field<ColumnSpinor>(g, [](const Vec3& r) { return texture(r, 0.0); });
    const auto phi = to_ideal_field(psi);
    const GridField<Vec3> P = bohm_momentum(phi);
    const GridField<Vec3> t0j = oracle::momentum_density(psi);
    const GridField<Vec3> oracle_p =
        zip_fields(t0j, psi, [](const Vec3& t, const ColumnSpinor& c) { return t / c.density(); });
    mp_err.push_back(max_abs_field(minus(P, momentum_weighted_mean(psi))));
    oracle_err.push_back(max_abs_field(minus(P, oracle_p)));
    def_err.push_back(max_abs_field(minus(P, momentum_defining_form(phi).momentum)));

    EXPECT_LE(max_abs_field(minus(momentum_weighted_mean(psi), momentum_euler_form(psi))), 1e-12);
  }
  for (const auto* e : {&mp_err, &oracle_err, &def_err}) {
    for (double s : convergence_slopes(*e)) {
      EXPECT_GE(s, 1.8);
      EXPECT_LE(s, 2.2);
    }
  }
}

TEST(Energy, StationaryStates) {
  const Grid g = Grid::line(-5, 5, 51, Boundary::clamped);
  const double E = 0.5, dt = 0.01;
  const auto scalar = fill_series<complex>(
      g, 0.0, dt, 3, [&](const Vec3& r, double t) { return std::exp(-r.x * r.x / 2) * std::polar(1.0, -E * t); });
  const GridField<double> eb = bohm_energy(to_ideal_series(scalar), 1);
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_NEAR(eb[p], std::sin(E * dt) / dt, 1e-12);

  const auto pauli = fill_series<ColumnSpinor>(g, 0.0, dt, 3, [&](const Vec3& r, double t) {
    const complex f = std::polar(1.0, -E * t);
    return ColumnSpinor{0.6 * std::exp(-r.x * r.x / 2) * f, complex(0.3, 0.2) * std::exp(-r.x * r.x / 3) * f};
  });
  const GridField<double> ep = bohm_energy(to_ideal_series(pauli), 1);
  const GridField<double> em = energy_weighted_mean(pauli, 1);
  const GridField<double> ee = energy_euler_form(pauli, 1);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(ep[p], E, 1e-5);
    EXPECT_NEAR(em[p], E, 1e-12);
    EXPECT_NEAR(ee[p], E, 1e-12);
  }

  const auto still = fill_series<ColumnSpinor>(g, 0.0, dt, 3, [](const Vec3& r, double) {
    return ColumnSpinor{std::exp(-r.x * r.x), 0.5};
  });
  EXPECT_LE(max_abs_field(bohm_energy(to_ideal_series(still), 1)), 1e-12);
  EXPECT_THROW((void)bohm_energy(to_ideal_series(still), 0), std::out_of_range);
}

TEST(Energy, TextureFormsAgreeAtSecondOrder) {
  const Grid g({{0, 2 * pi, 16}, {0, 2 * pi, 16}}, Boundary::periodic);
  std::vector<double> mp_err, oracle_err;
  for (double dt : {0.04, 0.02, 0.01}) {
    const auto psi = fill_series<ColumnSpinor>(g, 0.0, dt, 3, texture);
    const GridField<double> eb = bohm_energy(to_ideal_series(psi), 1);
    const GridField<double> t00 = oracle::energy_density(psi, 1);
    const GridField<double> oracle_e =
        zip_fields(t00, psi[1], [](double t, const ColumnSpinor& c) { return t / c.density(); });
    mp_err.push_back(max_abs_field(minus(eb, energy_weighted_mean(psi, 1))));
    oracle_err.push_back(max_abs_field(minus(eb, oracle_e)));
    EXPECT_LE(max_abs_field(minus(energy_weighted_mean(psi, 1), energy_euler_form(psi, 1))), 1e-12);
  }
  for (const auto* e : {&mp_err, &oracle_err}) {
    for (double s : convergence_slopes(*e)) {
      EXPECT_GE(s, 1.8);
      EXPECT_LE(s, 2.2);
    }
  }
}

TEST(WField, Examples) {
  const Grid g = Grid::line(-3, 3, 241, Boundary::clamped);
  const Multivector S = spin_bivector(Multivector::vector(Vec3{0, 0, 0.5}));
  const WField flat = w_field(GridField<double>(g, 2.0), GridField<Multivector>(g, S));
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_LE(max_abs(flat.assembled[p]), 1e-12);

  const auto rho = fill_field<double>(g, [](const Vec3& r) { return std::exp(-r.x * r.x); });
  const WField w = w_field(rho, GridField<Multivector>(g, S));
  const double h = g.spacing(0);
  for (std::size_t p = 1; p + 1 < g.size(); ++p) {
    const double x = g.position(p).x;
    // Central stencil error h^2 f'''/6 relative to f = exp(-x^2), times |S| = 1/2.
    const double bound = 1.1 * h * h * std::abs(8 * x * x * x - 12 * x) / 12 + 1e-12;
    EXPECT_LE(max_abs_diff(w.axis[0][p], S * (-2.0 * x)), bound);
  }
}

TEST(QuantumPotential, GaussianClosedForm) {
  const double sigma = 1.0;
  std::vector<double> q1_err;
  for (std::size_t n : {121, 241, 481}) {
    const Grid g = Grid::line(-6, 6, n, Boundary::clamped);
    const auto phi = to_ideal_field(sample(ScalarState{GaussianPacket{sigma, Vec3{}, Vec3{}, 1.0}}, g, 0.0));
    const QuantumPotential q = quantum_potential(phi, 1.0);
    double e1 = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
      const double x = g.position(p).x;
      const double want = 1 / (4 * sigma * sigma) - x * x / (8 * std::pow(sigma, 4));
      EXPECT_NEAR(q.Q[p], want, 1e-8);
      EXPECT_EQ(q.Q2[p], 0.0);
      EXPECT_EQ(q.Q_w[p], q.Q[p]);
      if (!g.near_boundary(p, 1)) e1 = std::fmax(e1, std::abs(q.Q1[p] - want));
    }
    q1_err.push_back(e1);
  }
  for (double s : convergence_slopes(q1_err)) EXPECT_NEAR(s, 2.0, 0.2);
}

TEST(QuantumPotential, PlanarSpinHelix) {
  const Grid g = periodic_line(128);
  const double k = 2.0, h = g.spacing(0);
  const auto psi = fill_field<ColumnSpinor>(g, [&](const Vec3& r) {
    return ColumnSpinor{std::polar(std::sqrt(0.5), k * r.x / 2), kI * std::polar(std::sqrt(0.5), -k * r.x / 2)};
  });
  const QuantumPotential q = quantum_potential(to_ideal_field(psi), 1.0);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(q.Q2[p], k * k / 8, 1e-12);
    EXPECT_NEAR(q.Q1[p], 0.0, 1e-12);
    EXPECT_NEAR(q.Q[p], q.Q1[p] + q.Q2[p], k * k * k * k * h * h / 8);
    EXPECT_NEAR(q.Q_w[p], q.Q[p], k * k * k * k * h * h / 8);
  }
}

TEST(QuantumPotential, UniformSpinHasNoSpinPart) {
  const Grid g = Grid::line(-5, 5, 81, Boundary::clamped);
  const auto psi = fill_field<ColumnSpinor>(g, [](const Vec3& r) {
    const double R = std::exp(-r.x * r.x / 4);
    return ColumnSpinor{0.6 * R, complex(0.0, 0.8) * R};
  });
  const QuantumPotential q = quantum_potential(to_ideal_field(psi), 1.0);
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_NEAR(q.Q2[p], 0.0, 1e-20);
}

TEST(QuantumPotential, TextureSplitConvergesAtSecondOrder) {
  std::vector<double> split_err, w_err;
  for (std::size_t n : {32, 64, 128}) {
    const Grid g({{0, 2 * pi, n}, {0, 2 * pi, n}}, Boundary::periodic);
    const auto psi = fill_field<ColumnSpinor>(g, [](const Vec3& r) { return texture(r, 0.0); });
    const QuantumPotential q = quantum_potential(to_ideal_field(psi), 1.0);
    const auto sum = zip_fields(q.Q1, q.Q2, std::plus<>{});
    split_err.push_back(max_abs_field(minus(q.Q, sum)));
    w_err.push_back(max_abs_field(minus(q.Q, q.Q_w)));
  }
  for (const auto* e : {&split_err, &w_err}) {
    for (double s : convergence_slopes(*e)) {
      EXPECT_GE(s, 1.8);
      EXPECT_LE(s, 2.2);
    }
  }
}

TEST(Current, Examples) {
  const Grid g({{-4, 4, 33}, {-4, 4, 33}, {-4, 4, 33}}, Boundary::clamped);
  const auto gauss = fill_field<ColumnSpinor>(g, [](const Vec3& r) {
    return ColumnSpinor{std::exp(-dot(r, r) / 2), 0.0};
  });
  const PauliCurrent c = pauli_current(to_ideal_field(gauss), 1.0);
  const GridField<Vec3> grad_rho = gradient(map_field(gauss, [](const ColumnSpinor& s) { return s.density(); }));
  const oracle::MessiahCurrent m = oracle::messiah_current(gauss, 1.0);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_LE(norm(c.J_rot[p] - cross(grad_rho[p], Vec3{0, 0, 0.5})), 1e-12);
    EXPECT_LE(norm(c.J_conv[p]), 1e-12);
    EXPECT_LE(norm(c.J_conv[p] + c.J_rot[p] - m.total[p]), 1e-12);
  }

  const Grid line = periodic_line(64);
  const double k = 2.0;
  const auto wave = fill_field<ColumnSpinor>(line, [&](const Vec3& r) {
    return std::polar(1.0, k * r.x) * ColumnSpinor{0.6, complex(0.0, 0.8)};
  });
  const PauliCurrent w = pauli_current(to_ideal_field(wave), 2.0);
  const double h = line.spacing(0);
  for (std::size_t p = 0; p < line.size(); ++p) {
    EXPECT_LE(norm(w.J_rot[p]), 1e-12);
    EXPECT_NEAR(w.v[p].x, std::sin(k * h) / h / 2.0, 1e-12);
  }

  const auto real = to_ideal_field(sample(ScalarState{GaussianPacket{1.0, Vec3{}, Vec3{}, 1.0}}, line, 0.0));
  EXPECT_LE(max_abs_field(pauli_current(real, 1.0).J_conv), 1e-12);
}

TEST(Expectation, MatchesOracle) {
  const IdealSpinor up = from_components(1.0, 0.0);
  EXPECT_NEAR(expectation(Multivector::scalar(kPauli, 1.0), cde(up)), 1.0, 1e-15);
  EXPECT_NEAR(expectation(Multivector::blade(kPauli, 3), cde(up)), 1.0, 1e-15);
  EXPECT_NEAR(expectation(Multivector::blade(kPauli, 1), cde(up)), 0.0, 1e-15);

  for (int n = 0; n < 100; ++n) {
    ColumnSpinor psi{{std::cos(n * 0.3), std::sin(n * 0.7)}, {std::sin(n * 1.1), 0.2}};
    psi = psi * (1.0 / std::sqrt(psi.density()));
    Multivector b(kPauli);
    for (std::size_t i = 0; i < 8; ++i) b[i] = std::sin(1.7 * n + static_cast<double>(i));
    const double want = oracle::expectation(oracle::matrix_rep(b), oracle::density_matrix(psi));
    EXPECT_NEAR(expectation(b, cde(from_components(psi))), want, 1e-12);
  }
}

TEST(PhaseGauge, ObservablesIgnoreGlobalPhase) {
  const Grid g({{0, 2 * pi, 24}, {0, 2 * pi, 24}}, Boundary::periodic);
  const auto psi = fill_series<ColumnSpinor>(g, 0.0, 0.01, 3, texture);
  const SnapshotSeries<IdealSpinor> phi = to_ideal_series(psi);
  const SnapshotSeries<IdealSpinor> rotated = map_series(phi, [](const GridField<IdealSpinor>& f) {
    return map_field(f, [](const IdealSpinor& s) { return phase_rotate(s, 1.234); });
  });
  EXPECT_LE(max_abs_field(minus(bohm_momentum(phi[1]), bohm_momentum(rotated[1]))), 1e-12);
  EXPECT_LE(max_abs_field(minus(bohm_energy(phi, 1), bohm_energy(rotated, 1))), 1e-12);
  const QuantumPotential a = quantum_potential(phi[1], 1.0), b = quantum_potential(rotated[1], 1.0);
  EXPECT_LE(max_abs_field(minus(a.Q, b.Q)), 1e-12);
  EXPECT_LE(max_abs_field(minus(a.Q2, b.Q2)), 1e-12);
  EXPECT_LE(max_abs_field(minus(a.Q_w, b.Q_w)), 1e-12);
  EXPECT_LE(max_abs_field(minus(spin_field(phi[1]), spin_field(rotated[1]))), 1e-12);
  EXPECT_LE(max_abs_field(minus(pauli_current(phi[1], 1.0).v, pauli_current(rotated[1], 1.0).v)), 1e-12);
}

TEST(Nesting, PauliWithEmptyLowerComponentMatchesScalar) {
  const Grid g = Grid::line(-6, 6, 97, Boundary::clamped);
  const auto scalar = fill_series<complex>(g, 0.0, 0.01, 3, [](const Vec3& r, double t) {
    return std::exp(-r.x * r.x / 2) * std::polar(1.0, 0.7 * r.x - 0.3 * t + 0.1 * r.x * r.x);
  });
  const auto pauli = map_series(scalar, [](const GridField<complex>& f) {
    return map_field(f, [](complex z) { return ColumnSpinor{z, 0.0}; });
  });
  const auto s = to_ideal_series(scalar);
  const auto p = to_ideal_series(pauli);
  EXPECT_LE(max_abs_field(minus(bohm_momentum(s[1]), bohm_momentum(p[1]))), 1e-10);
  EXPECT_LE(max_abs_field(minus(bohm_energy(s, 1), bohm_energy(p, 1))), 1e-10);
  const QuantumPotential qs = quantum_potential(s[1], 1.0), qp = quantum_potential(p[1], 1.0);
  EXPECT_LE(max_abs_field(minus(qs.Q, qp.Q)), 1e-10);
  EXPECT_LE(max_abs_field(minus(qs.Q1, qp.Q1)), 1e-10);
  EXPECT_LE(max_abs_field(qp.Q2), 1e-10);
}

TEST(Masking, NodesAreNaN) {
  const Grid g = Grid::line(-1, 1, 21, Boundary::clamped);
  const auto psi = fill_field<complex>(g, [](const Vec3& r) { return complex(r.x, 0.0); });
  const GridField<Vec3> P = bohm_momentum(to_ideal_field(psi));
  EXPECT_TRUE(std::isnan(P[10].x));
  EXPECT_FALSE(std::isnan(P[9].x));
  const ResidualStats st = residual_stats(component(P, 0), 0.0);
  EXPECT_NEAR(st.masked_fraction, 1.0 / 21.0, 1e-15);
}

TEST(Residuals, HamiltonJacobi) {
  const Grid g = periodic_line(64);
  const double k = 2.0, h = g.spacing(0);
  const auto phi = to_ideal_field(sample(ScalarState{PlaneWave{1.0, Vec3{k, 0, 0}, 1.0}}, g, 0.0));
  const GridField<double> r = qhj_residual(GridField<double>(g, k * k / 2), bohm_momentum(phi),
                                           quantum_potential(phi, 1.0).Q, std::nullopt, 1.0);
  for (std::size_t p = 0; p < g.size(); ++p) EXPECT_LE(std::abs(r[p]), k * k * k * k * h * h / 3);

  const auto flat = to_ideal_field(GridField<complex>(g, 1.0));
  const GridField<double> z = qhj_residual(GridField<double>(g, 0.0), bohm_momentum(flat),
                                           quantum_potential(flat, 1.0).Q, std::nullopt, 1.0);
  EXPECT_LE(max_abs_field(z), 1e-12);

  const Grid line = Grid::line(-6, 6, 121, Boundary::clamped);
  SnapshotSeries<complex> ground;
  const double dt = 0.001;
  for (int n = 0; n < 3; ++n) {
    ground.push_back(n * dt, sample(ScalarState{HarmonicGroundState{1.0, 1.0}}, line, n * dt));
  }
  const auto gs = to_ideal_series(ground);
  const auto V = fill_field<double>(line, [](const Vec3& r) { return r.x * r.x / 2; });
  const GridField<double> rh =
      qhj_residual(bohm_energy(gs, 1), bohm_momentum(gs[1]), quantum_potential(gs[1], 1.0).Q, V, 1.0);
  EXPECT_LE(max_abs_field(rh), 1e-6);
  EXPECT_LE(max_abs_field(continuity_residual(gs, 1, 1.0)), 1e-12);
}

TEST(Residuals, StaticUniformSpin) {
  const Grid g = Grid::line(-4, 4, 41, Boundary::clamped);
  const auto psi = fill_series<ColumnSpinor>(g, 0.0, 0.01, 3, [](const Vec3& r, double) {
    return std::exp(-r.x * r.x / 2) * ColumnSpinor{0.8, complex(0.36, 0.48)};
  });
  const auto phi = to_ideal_series(psi);
  EXPECT_LE(max_abs_field(spin_transport_residual(phi, 1, 1.0)), 1e-12);
  EXPECT_LE(max_abs_field(spin_norm_drift(phi, 1, 1.0)), 1e-12);
  EXPECT_LE(max_abs_field(continuity_residual(phi, 1, 1.0)), 1e-12);

  const auto scalar = to_ideal_series(map_series(psi, [](const GridField<ColumnSpinor>& f) {
    return map_field(f, [](const ColumnSpinor& c) { return c.psi1; });
  }));
  EXPECT_THROW((void)spin_transport_residual(scalar, 1, 1.0), std::domain_error);
}

TEST(Residuals, StaticTextureHasNoTorque) {
  const Grid g = periodic_line(64);
  const auto psi = fill_series<ColumnSpinor>(g, 0.0, 0.01, 3, [](const Vec3& r, double) {
    return euler_column({1.0 + 0.5 * std::sin(r.x), std::sin(2 * r.x), 0.3, 1.0});
  });
  const QuantumTorque t = quantum_torque(psi, 1, 1.0, std::nullopt);
  EXPECT_LE(max_abs_field(t.torque), 1e-12);
}

}  // namespace
}  // namespace cliffqm
