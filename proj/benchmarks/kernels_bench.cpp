// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "cliffqm/calculus.hpp"
#include "cliffqm/dynamics.hpp"
#include "cliffqm/multivector.hpp"
#include "cliffqm/observables.hpp"
#include "cliffqm/scenario.hpp"

namespace {

using namespace cliffqm;

Multivector sample_multivector(Signature sig, double seed) {
  Multivector m(sig);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::sin(seed + 0.7 * static_cast<double>(i));
  return m;
}

void BM_GeometricProductPauli(benchmark::State& state) {
  const Multivector a = sample_multivector(kPauli, 0.3), b = sample_multivector(kPauli, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProductPauli);

void BM_GeometricProductSchrodinger(benchmark::State& state) {
  const Multivector a = sample_multivector(kSchrodinger, 0.3), b = sample_multivector(kSchrodinger, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProductSchrodinger);

void BM_Gradient3D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid g({{0, 1, n}, {0, 1, n}, {0, 1, n}}, Boundary::periodic);
  GridField<double> f(g, 0.0);
  for (std::size_t p = 0; p < g.size(); ++p) {
    const Vec3 r = g.position(p);
    f[p] = std::sin(2 * std::numbers::pi * r.x) * std::cos(2 * std::numbers::pi * r.y) + r.z;
  }
  for (auto _ : state) benchmark::DoNotOptimize(gradient(f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_Gradient3D)->Arg(16)->Arg(32)->Arg(64);

void BM_CrankNicolsonStep1D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid g = Grid::line(-20, 20, n, Boundary::clamped);
  GridField<complex> psi = sample(ScalarState{GaussianPacket{1.0, Vec3{}, Vec3{1.0, 0, 0}, 1.0}}, g, 0.0);
  const double s = 1.0 / std::sqrt(norm2(psi));
  for (complex& c : psi.values()) c *= s;
  EvolutionConfig cfg;
  cfg.dt = 1e-3;
  cfg.steps = 10;
  cfg.save_from = cfg.steps;
  for (auto _ : state) benchmark::DoNotOptimize(evolve_schrodinger(psi, cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cfg.steps));
}
BENCHMARK(BM_CrankNicolsonStep1D)->Arg(1025)->Arg(4097);

void BM_BohmMomentumPauli2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid g({{0, 2 * std::numbers::pi, n}, {0, 2 * std::numbers::pi, n}}, Boundary::periodic);
  GridField<ColumnSpinor> psi(g, ColumnSpinor{});
  for (std::size_t p = 0; p < g.size(); ++p) {
    const Vec3 r = g.position(p);
    psi[p] = {std::polar(1.2 + 0.3 * std::cos(r.x), std::sin(r.y)), std::polar(1.0, r.x)};
  }
  const GridField<IdealSpinor> phi = to_ideal_field(psi);
  for (auto _ : state) benchmark::DoNotOptimize(bohm_momentum(phi));
}
BENCHMARK(BM_BohmMomentumPauli2D)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
