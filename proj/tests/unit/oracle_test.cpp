// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "field_support.hpp"
#include "test_support.hpp"

namespace cliffqm {
namespace {

using oracle::MatrixRep;
using std::numbers::pi;
using testing::fill_field;
using testing::fill_series;
using testing::random_column;
using testing::random_multivector;

const complex kI{0.0, 1.0};

double diff(const MatrixRep& a, const MatrixRep& b) { return (a - b).cwiseAbs().maxCoeff(); }

MatrixRep mat2(complex a, complex b, complex c, complex d) {
  MatrixRep m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(MatrixRep, Examples) {
  EXPECT_EQ(diff(oracle::matrix_rep(Multivector::blade(kPauli, 3)), mat2(1, 0, 0, -1)), 0.0);
  EXPECT_EQ(diff(oracle::matrix_rep(central_unit(kPauli)), mat2(kI, 0, 0, kI)), 0.0);
  EXPECT_EQ(diff(oracle::matrix_rep(Multivector::scalar(kPauli, 1.0)), mat2(1, 0, 0, 1)), 0.0);
  const MatrixRep e = oracle::matrix_rep(Multivector::blade(kSchrodinger, 1));
  ASSERT_EQ(e.rows(), 1);
  EXPECT_EQ(e(0, 0), kI);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(diff(oracle::matrix_rep(Multivector::blade(kPauli, static_cast<std::size_t>(k))),
                   oracle::pauli_matrix(k)),
              0.0);
  }
  EXPECT_THROW((void)oracle::pauli_matrix(4), std::out_of_range);
}

TEST(MatrixRep, Homomorphism) {
  for (Signature sig : {kSchrodinger, kPauli}) {
    for (int n = 0; n < 200; ++n) {
      const Multivector a = random_multivector(sig);
      const Multivector b = random_multivector(sig);
      EXPECT_LE(diff(oracle::matrix_rep(a * b), oracle::matrix_rep(a) * oracle::matrix_rep(b)), 1e-12);
      EXPECT_LE(diff(oracle::matrix_rep(a + b), oracle::matrix_rep(a) + oracle::matrix_rep(b)), 1e-12);
    }
  }
}

TEST(MatrixRep, ConjugateOfUnitEvenIsAdjoint) {
  for (int n = 0; n < 100; ++n) {
    const Multivector u = from_components(random_column()).rotor();
    EXPECT_LE(diff(oracle::matrix_rep(clifford_conjugate(u)), oracle::matrix_rep(u).adjoint()), 1e-12);
  }
}

TEST(DensityMatrix, Examples) {
  EXPECT_EQ(diff(oracle::density_matrix(ColumnSpinor{1.0, 0.0}), mat2(1, 0, 0, 0)), 0.0);
  const double r = std::sqrt(0.5);
  EXPECT_LE(diff(oracle::density_matrix(ColumnSpinor{r, r}), mat2(0.5, 0.5, 0.5, 0.5)), 1e-15);
  for (int n = 0; n < 50; ++n) {
    const ColumnSpinor psi = random_column();
    EXPECT_NEAR(oracle::density_matrix(psi).trace().real(), psi.density(), 1e-14);
  }
}

TEST(DensityMatrix, ExpectationIsRealTrace) {
  const MatrixRep rho = oracle::density_matrix(ColumnSpinor{1.0, 0.0});
  EXPECT_NEAR(oracle::expectation(oracle::pauli_matrix(3), rho), 1.0, 1e-15);
  EXPECT_NEAR(oracle::expectation(oracle::pauli_matrix(1), rho), 0.0, 1e-15);
}

TEST(MomentumDensity, Examples) {
  const Grid g = Grid::line(0, 2 * pi, 64, Boundary::periodic);
  const double k = 3.0, h = g.spacing(0);
  const auto wave = fill_field<complex>(g, [&](const Vec3& r) { return std::polar(1.0, k * r.x); });
  const GridField<Vec3> t = oracle::momentum_density(wave);
  const auto real = fill_field<complex>(g, [](const Vec3& r) { return complex(std::cos(r.x) + 2.0, 0.0); });
  const GridField<Vec3> z = oracle::momentum_density(real);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(t[p].x, std::sin(k * h) / h, 1e-12);
    EXPECT_EQ(z[p].x, 0.0);
  }
}

TEST(EnergyDensity, Examples) {
  const Grid g = Grid::line(-3, 3, 31, Boundary::clamped);
  const double E = 0.75, dt = 0.01;
  const auto s = fill_series<complex>(g, 0.0, dt, 3, [&](const Vec3& r, double t) {
    return std::exp(-r.x * r.x / 2) * std::polar(1.0, -E * t);
  });
  const GridField<double> t00 = oracle::energy_density(s, 1);
  const auto still = fill_series<ColumnSpinor>(g, 0.0, dt, 3, [](const Vec3& r, double) {
    return ColumnSpinor{std::exp(-r.x * r.x), 0.3};
  });
  const GridField<double> z = oracle::energy_density(still, 1);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(t00[p], std::norm(s[1][p]) * std::sin(E * dt) / dt, 1e-12);
    EXPECT_EQ(z[p], 0.0);
  }
}

TEST(MessiahCurrent, Examples) {
  const Grid g = Grid::line(0, 2 * pi, 64, Boundary::periodic);
  const double k = 2.0, m = 2.0, h = g.spacing(0);
  const auto wave = fill_field<ColumnSpinor>(g, [&](const Vec3& r) {
    return std::polar(1.0, k * r.x) * ColumnSpinor{0.6, complex(0.0, 0.8)};
  });
  const oracle::MessiahCurrent j = oracle::messiah_current(wave, m);
  for (std::size_t p = 0; p < g.size(); ++p) {
    EXPECT_NEAR(j.total[p].x, std::sin(k * h) / h / m, 1e-12);
    EXPECT_LE(norm(j.rotational[p]), 1e-12);
  }

  const Grid cube({{0, 2 * pi, 16}, {0, 2 * pi, 16}, {0, 2 * pi, 16}}, Boundary::periodic);
  const auto texture = fill_field<ColumnSpinor>(cube, [](const Vec3& r) {
    return ColumnSpinor{1.5 + std::cos(r.x), std::sin(r.y) + 0.5 * std::cos(r.z)};
  });
  const oracle::MessiahCurrent t = oracle::messiah_current(texture, 1.0);
  double rot = 0.0;
  for (std::size_t p = 0; p < cube.size(); ++p) {
    EXPECT_LE(norm(t.convective[p]), 1e-15);
    rot = std::fmax(rot, norm(t.rotational[p]));
  }
  EXPECT_GT(rot, 0.1);
}

}  // namespace
}  // namespace cliffqm
