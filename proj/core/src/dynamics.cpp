// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/dynamics.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cliffqm/scenario.hpp"

namespace cliffqm {

namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kNormTolerance = 1e-8;

// Tridiagonal system with constant off-diagonal c, prefactored once.
// Cyclic systems are handled with the Sherman-Morrison correction.
class LineSolver {
 public:
  LineSolver(std::vector<complex> diag, complex off, bool cyclic)
      : n_(diag.size()), off_(off), cyclic_(cyclic), diag_(std::move(diag)) {
    if (cyclic_) {
      gamma_ = -diag_[0];
      diag_[0] -= gamma_;
      diag_[n_ - 1] -= off_ * off_ / gamma_;
    }
    factor();
    if (cyclic_) {
      z_.assign(n_, complex{});
      z_[0] = gamma_;
      z_[n_ - 1] = off_;
      thomas(z_);
    }
  }

  void solve(std::vector<complex>& x) const {
    thomas(x);
    if (!cyclic_) return;
    const complex vy = x[0] + off_ / gamma_ * x[n_ - 1];
    const complex vz = z_[0] + off_ / gamma_ * z_[n_ - 1];
    const complex f = vy / (1.0 + vz);
    for (std::size_t i = 0; i < n_; ++i) x[i] -= f * z_[i];
  }

 private:
  void factor() {
    cprime_.resize(n_);
    denom_.resize(n_);
    denom_[0] = diag_[0];
    cprime_[0] = off_ / denom_[0];
    for (std::size_t i = 1; i < n_; ++i) {
      denom_[i] = diag_[i] - off_ * cprime_[i - 1];
      cprime_[i] = off_ / denom_[i];
    }
  }

  void thomas(std::vector<complex>& x) const {
    x[0] /= denom_[0];
    for (std::size_t i = 1; i < n_; ++i) x[i] = (x[i] - off_ * x[i - 1]) / denom_[i];
    for (std::size_t i = n_ - 1; i-- > 0;) x[i] -= cprime_[i] * x[i + 1];
  }

  std::size_t n_;
  complex off_;
  bool cyclic_;
  complex gamma_{};
  std::vector<complex> diag_;
  std::vector<complex> cprime_;
  std::vector<complex> denom_;
  std::vector<complex> z_;
};

struct FftwPlanDeleter {
  void operator()(fftw_plan_s* p) const noexcept { fftw_destroy_plan(p); }
};
using FftwPlan = std::unique_ptr<fftw_plan_s, FftwPlanDeleter>;

class Stepper {
 public:
  virtual ~Stepper() = default;
  virtual void advance(std::vector<complex>& psi) = 0;
};

class CrankNicolson final : public Stepper {
 public:
  CrankNicolson(const Grid& grid, const EvolutionConfig& cfg) : grid_(grid) {
    const bool cyclic = grid.boundary() == Boundary::periodic;
    const bool inline_potential = grid.dim() == 1 && cfg.potential.has_value();
    for (int a = 0; a < grid.dim(); ++a) {
      const double h = grid.spacing(a);
      const double kin = 1.0 / (2.0 * cfg.mass * h * h);
      const std::size_t n = grid.count(a);
      std::vector<complex> diag(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double v = inline_potential ? (*cfg.potential)[i] : 0.0;
        diag[i] = 1.0 + kI * (0.5 * cfg.dt) * (2.0 * kin + v);
      }
      off_.push_back(-kI * (0.5 * cfg.dt) * kin);
      kin_.push_back(kin);
      solvers_.emplace_back(std::move(diag), off_.back(), cyclic);
    }
    if (inline_potential) {
      inline_v_ = cfg.potential->values();
    } else if (cfg.potential) {
      half_phase_.reserve(grid.size());
      for (double v : cfg.potential->values()) half_phase_.push_back(std::exp(-kI * (0.5 * cfg.dt * v)));
    }
    dt_ = cfg.dt;
  }

  void advance(std::vector<complex>& psi) override {
    apply_phase(psi);
    for (int a = 0; a < grid_.dim(); ++a) sweep(psi, a);
    apply_phase(psi);
  }

 private:
  void apply_phase(std::vector<complex>& psi) const {
    if (half_phase_.empty()) return;
    for (std::size_t p = 0; p < psi.size(); ++p) psi[p] *= half_phase_[p];
  }

  void sweep(std::vector<complex>& psi, int axis) {
    const std::size_t n = grid_.count(axis);
    const std::size_t s = grid_.stride(axis);
    const bool cyclic = grid_.boundary() == Boundary::periodic;
    const double kin = kin_[static_cast<std::size_t>(axis)];
    const LineSolver& solver = solvers_[static_cast<std::size_t>(axis)];
    line_.resize(n);
    rhs_.resize(n);
    for (std::size_t base = 0; base < psi.size(); ++base) {
      if (grid_.coords(base)[static_cast<std::size_t>(axis)] != 0) continue;
      for (std::size_t i = 0; i < n; ++i) line_[i] = psi[base + i * s];
      // (1 - i dt H / 2) psi
      for (std::size_t i = 0; i < n; ++i) {
        complex left = i > 0 ? line_[i - 1] : (cyclic ? line_[n - 1] : complex{});
        complex right = i + 1 < n ? line_[i + 1] : (cyclic ? line_[0] : complex{});
        const double v = inline_v_.empty() ? 0.0 : inline_v_[i];
        const complex h_psi = kin * (2.0 * line_[i] - left - right) + v * line_[i];
        rhs_[i] = line_[i] - kI * (0.5 * dt_) * h_psi;
      }
      solver.solve(rhs_);
      for (std::size_t i = 0; i < n; ++i) psi[base + i * s] = rhs_[i];
    }
  }

  Grid grid_;
  double dt_ = 0.0;
  std::vector<complex> off_;
  std::vector<double> kin_;
  std::vector<LineSolver> solvers_;
  std::vector<double> inline_v_;
  std::vector<complex> half_phase_;
  std::vector<complex> line_;
  std::vector<complex> rhs_;
};

class SplitStep final : public Stepper {
 public:
  SplitStep(const Grid& grid, const EvolutionConfig& cfg) : buffer_(grid.size()) {
    if (grid.boundary() != Boundary::periodic) {
      throw std::invalid_argument("split-step evolution needs a periodic grid");
    }
    std::vector<int> dims;
    for (int a = grid.dim() - 1; a >= 0; --a) dims.push_back(static_cast<int>(grid.count(a)));
    auto* data = reinterpret_cast<fftw_complex*>(buffer_.data());
    forward_.reset(fftw_plan_dft(grid.dim(), dims.data(), data, data, FFTW_FORWARD, FFTW_ESTIMATE));
    backward_.reset(fftw_plan_dft(grid.dim(), dims.data(), data, data, FFTW_BACKWARD, FFTW_ESTIMATE));
    if (!forward_ || !backward_) throw std::runtime_error("FFTW plan creation failed");

    const double scale = 1.0 / static_cast<double>(grid.size());
    kinetic_.resize(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const auto c = grid.coords(p);
      double k2 = 0.0;
      for (int a = 0; a < grid.dim(); ++a) {
        const auto n = static_cast<long>(grid.count(a));
        long f = static_cast<long>(c[static_cast<std::size_t>(a)]);
        if (f > n / 2) f -= n;
        const double k = 2.0 * std::numbers::pi * static_cast<double>(f) / (static_cast<double>(n) * grid.spacing(a));
        k2 += k * k;
      }
      kinetic_[p] = scale * std::exp(-kI * (cfg.dt * k2 / (2.0 * cfg.mass)));
    }
    if (cfg.potential) {
      for (double v : cfg.potential->values()) half_phase_.push_back(std::exp(-kI * (0.5 * cfg.dt * v)));
    }
  }

  void advance(std::vector<complex>& psi) override {
    for (std::size_t p = 0; p < psi.size(); ++p) buffer_[p] = half_phase_.empty() ? psi[p] : psi[p] * half_phase_[p];
    fftw_execute(forward_.get());
    for (std::size_t p = 0; p < psi.size(); ++p) buffer_[p] *= kinetic_[p];
    fftw_execute(backward_.get());
    for (std::size_t p = 0; p < psi.size(); ++p) psi[p] = half_phase_.empty() ? buffer_[p] : buffer_[p] * half_phase_[p];
  }

 private:
  std::vector<complex> buffer_;
  std::vector<complex> kinetic_;
  std::vector<complex> half_phase_;
  FftwPlan forward_;
  FftwPlan backward_;
};

std::unique_ptr<Stepper> make_stepper(const Grid& grid, const EvolutionConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(cfg.mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (cfg.save_every == 0) throw std::invalid_argument("save_every must be at least 1");
  if (cfg.potential && !(cfg.potential->grid() == grid)) {
    throw std::invalid_argument("potential lives on a different grid");
  }
  if (cfg.scheme == Scheme::split_step) return std::make_unique<SplitStep>(grid, cfg);
  return std::make_unique<CrankNicolson>(grid, cfg);
}

std::vector<std::string> accuracy_warnings(const Grid& grid, const EvolutionConfig& cfg) {
  double h = grid.spacing(0);
  for (int a = 1; a < grid.dim(); ++a) h = std::min(h, grid.spacing(a));
  std::vector<std::string> out;
  if (cfg.dt > h * h * cfg.mass) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "dt = " << cfg.dt << " exceeds h^2 m = " << h * h * cfg.mass << "; expect reduced accuracy";
    out.push_back(msg.str());
  }
  return out;
}

void require_normalized(double norm) {
  if (std::fabs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "initial state must be normalized: norm = " << norm;
    throw std::invalid_argument(msg.str());
  }
}

bool saved(std::size_t step, const EvolutionConfig& cfg) {
  return step >= cfg.save_from && (step - cfg.save_from) % cfg.save_every == 0;
}

double norm_of(const std::vector<complex>& a, double dv) {
  double s = 0.0;
  for (const complex& z : a) s += std::norm(z);
  return s * dv;
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::split_step ? "split-step" : "crank-nicolson"; }

Scheme scheme_from_string(const std::string& name) {
  if (name == "crank-nicolson") return Scheme::crank_nicolson;
  if (name == "split-step") return Scheme::split_step;
  throw std::invalid_argument("unknown scheme '" + name + "' (expected crank-nicolson or split-step)");
}

GridField<double> harmonic_potential(const Grid& grid, double mass, double omega) {
  GridField<double> v(grid, 0.0);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Vec3 r = grid.position(p);
    v[p] = 0.5 * mass * omega * omega * dot(r, r);
  }
  return v;
}

Evolution<complex> evolve_schrodinger(const GridField<complex>& psi0, const EvolutionConfig& cfg) {
  const Grid& grid = psi0.grid();
  require_normalized(norm2(psi0));
  auto stepper = make_stepper(grid, cfg);
  Evolution<complex> out;
  out.warnings = accuracy_warnings(grid, cfg);
  if (saved(0, cfg)) out.series.push_back(0.0, psi0);
  const double dv = grid.cell_volume();
  std::vector<complex> psi = psi0.values();
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    stepper->advance(psi);
    const double t = static_cast<double>(step) * cfg.dt;
    const double drift = std::fabs(norm_of(psi, dv) - 1.0);
    out.max_norm_drift = std::max(out.max_norm_drift, drift);
    if (!(drift <= cfg.abort_drift)) {
      out.aborted = true;
      break;
    }
    if (saved(step, cfg)) out.series.push_back(t, GridField<complex>(grid, psi));
  }
  return out;
}

Evolution<ColumnSpinor> evolve_pauli(const GridField<ColumnSpinor>& psi0, const EvolutionConfig& cfg) {
  const Grid& grid = psi0.grid();
  require_normalized(norm2(psi0));
  auto stepper = make_stepper(grid, cfg);
  Evolution<ColumnSpinor> out;
  out.warnings = accuracy_warnings(grid, cfg);
  if (saved(0, cfg)) out.series.push_back(0.0, psi0);
  const double dv = grid.cell_volume();
  std::vector<complex> a(grid.size());
  std::vector<complex> b(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    a[p] = psi0[p].psi1;
    b[p] = psi0[p].psi2;
  }
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    stepper->advance(a);
    stepper->advance(b);
    const double drift = std::fabs(norm_of(a, dv) + norm_of(b, dv) - 1.0);
    out.max_norm_drift = std::max(out.max_norm_drift, drift);
    if (!(drift <= cfg.abort_drift)) {
      out.aborted = true;
      break;
    }
    if (saved(step, cfg)) {
      std::vector<ColumnSpinor> frame(grid.size());
      for (std::size_t p = 0; p < grid.size(); ++p) frame[p] = {a[p], b[p]};
      out.series.push_back(static_cast<double>(step) * cfg.dt, GridField<ColumnSpinor>(grid, std::move(frame)));
    }
  }
  return out;
}

}  // namespace cliffqm
