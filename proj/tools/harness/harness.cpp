// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cliffqm/calculus.hpp"
#include "cliffqm/conservation.hpp"
#include "cliffqm/dynamics.hpp"
#include "cliffqm/observables.hpp"
#include "cliffqm/oracle.hpp"

namespace cliffqm::harness {

namespace {

std::size_t pow_size(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

ColumnSpinor lift(complex psi) { return {psi, complex{}}; }
ColumnSpinor lift(const ColumnSpinor& psi) { return psi; }

template <class V>
GridField<ColumnSpinor> lift_field(const GridField<V>& f) {
  return map_field(f, [](const V& v) { return lift(v); });
}

template <class V>
double field_norm2(const GridField<V>& f) {
  return norm2(f);
}

template <class V>
void normalize(GridField<V>& f) {
  const double n = field_norm2(f);
  if (!(n > 0.0)) throw std::invalid_argument("initial state vanishes on the grid");
  const double s = 1.0 / std::sqrt(n);
  for (V& v : f.values()) v = v * s;
}

Evolution<complex> evolve(const GridField<complex>& psi0, const EvolutionConfig& e) {
  return evolve_schrodinger(psi0, e);
}
Evolution<ColumnSpinor> evolve(const GridField<ColumnSpinor>& psi0, const EvolutionConfig& e) {
  return evolve_pauli(psi0, e);
}

GridField<double> ratio(const GridField<double>& a, const GridField<double>& rho) {
  return zip_fields(a, rho, [](double x, double r) { return x / r; });
}
GridField<Vec3> ratio(const GridField<Vec3>& a, const GridField<double>& rho) {
  return zip_fields(a, rho, [](const Vec3& x, double r) { return x / r; });
}

template <class S>
const S& worse(const S& a, const S& b) {
  return (std::isnan(b.max_abs) || b.max_abs > a.max_abs) ? b : a;
}

const char* kAxisNames[] = {"x", "y", "z"};

void add_vector_columns(std::vector<Column>& cols, const std::string& name, const GridField<Vec3>& v, int dim) {
  for (int a = 0; a < dim; ++a) {
    Column c{name + "_" + kAxisNames[a], {}};
    c.values.reserve(v.size());
    for (const Vec3& x : v) c.values.push_back(x[static_cast<std::size_t>(a)]);
    cols.push_back(std::move(c));
  }
}

void add_scalar_column(std::vector<Column>& cols, const std::string& name, const GridField<double>& f) {
  cols.push_back({name, f.values()});
}

std::optional<GridField<double>> build_potential(const ScenarioConfig& cfg) {
  switch (cfg.potential.kind) {
    case PotentialSpec::Kind::none:
      return std::nullopt;
    case PotentialSpec::Kind::harmonic:
      return harmonic_potential(cfg.grid, cfg.mass, cfg.potential.omega);
    case PotentialSpec::Kind::table:
      return GridField<double>(cfg.grid, cfg.potential.table);
  }
  return std::nullopt;
}

bool enabled(const ScenarioConfig& cfg, const std::string& name) {
  const auto it = cfg.checks.find(name);
  return it != cfg.checks.end() && it->second.enabled;
}

template <class V>
void analyse(const ScenarioConfig& cfg, const SnapshotSeries<V>& psi, const std::optional<GridField<double>>& pot,
             LevelResult& out) {
  const double m = cfg.mass;
  const double dt = psi.dt();
  const std::size_t layer = cfg.boundary_layer;
  const int dim = psi.grid().dim();
  const bool pauli = cfg.particle == Particle::pauli;

  const SnapshotSeries<IdealSpinor> phi = to_ideal_series(psi);
  const GridField<double> rho = density(phi[1]);
  const GridField<Vec3> P = bohm_momentum(phi[1]);
  const GridField<double> E = bohm_energy(phi, 1);
  const QuantumPotential q = quantum_potential(phi[1], m);

  if (enabled(cfg, "qhj")) out.stats["qhj"] = residual_stats(qhj_residual(E, P, q.Q, pot, m), dt, layer);
  if (enabled(cfg, "continuity")) out.stats["continuity"] = residual_stats(continuity_residual(phi, 1, m), dt, layer);

  SnapshotSeries<ColumnSpinor> col;
  for (std::size_t k = 0; k < psi.size(); ++k) col.push_back(psi.time(k), lift_field(psi[k]));
  if (enabled(cfg, "momentum_agreement")) {
    const GridField<Vec3> oracle_p = ratio(oracle::momentum_density(psi[1]), rho);
    out.stats["momentum_agreement"] = worse(difference_stats(P, momentum_weighted_mean(col[1]), dt, layer),
                                            difference_stats(P, oracle_p, dt, layer));
  }
  if (enabled(cfg, "energy_agreement")) {
    const GridField<double> oracle_e = ratio(oracle::energy_density(psi, 1), rho);
    out.stats["energy_agreement"] = worse(difference_stats(E, energy_weighted_mean(col, 1), dt, layer),
                                          difference_stats(E, oracle_e, dt, layer));
  }

  std::optional<PauliCurrent> current;
  if (pauli) {
    current = pauli_current(phi[1], m);
    if (enabled(cfg, "quantum_split")) {
      out.stats["quantum_split"] = difference_stats(q.Q, zip_fields(q.Q1, q.Q2, std::plus<>{}), dt, layer);
    }
    if (enabled(cfg, "spin_transport")) {
      out.stats["spin_transport"] = residual_stats(spin_transport_residual(phi, 1, m), dt, layer);
    }
    if (enabled(cfg, "spin_norm")) out.stats["spin_norm"] = residual_stats(spin_norm_drift(phi, 1, m), dt, layer);
    if (enabled(cfg, "current")) {
      const oracle::MessiahCurrent j = oracle::messiah_current(col[1], m);
      out.stats["current"] =
          difference_stats(j.total, zip_fields(current->J_conv, current->J_rot, std::plus<>{}), dt, layer);
    }
  }

  out.columns.clear();
  add_scalar_column(out.columns, "rho", rho);
  add_vector_columns(out.columns, "P", P, dim);
  add_scalar_column(out.columns, "E", E);
  add_scalar_column(out.columns, "Q", q.Q);
  if (pauli) {
    add_scalar_column(out.columns, "Q1", q.Q1);
    add_scalar_column(out.columns, "Q2", q.Q2);
    add_vector_columns(out.columns, "s", spin_field(phi[1]), dim);
    add_vector_columns(out.columns, "v", current->v, dim);
  }
  if (pot) add_scalar_column(out.columns, "V", *pot);
}

template <class V>
GridField<Vec3> velocity(const ScenarioConfig& cfg, const GridField<V>& frame) {
  const GridField<IdealSpinor> phi = to_ideal_field(frame);
  if (cfg.particle == Particle::pauli) return pauli_current(phi, cfg.mass).v;
  const double m = cfg.mass;
  return map_field(bohm_momentum(phi), [m](const Vec3& p) { return p / m; });
}

template <class V>
LevelResult run_typed(const ScenarioConfig& cfg, GridField<V> psi0, bool with_trajectories) {
  LevelResult out;
  out.grid = cfg.grid;
  out.h = cfg.grid.h();
  out.dt = cfg.dt;
  normalize(psi0);

  EvolutionConfig e;
  e.mass = cfg.mass;
  e.potential = build_potential(cfg);
  e.dt = cfg.dt;
  e.steps = cfg.steps;
  e.save_every = cfg.save_every;
  e.scheme = cfg.scheme;
  e.abort_drift = cfg.abort_drift;
  const Evolution<V> main = evolve(psi0, e);
  out.max_norm_drift = main.max_norm_drift;
  out.aborted = main.aborted;
  out.warnings = main.warnings;
  if (out.aborted) return out;

  // Two further steps give a centred time window around the analysis frame.
  GridField<V> last = main.series[main.series.size() - 1];
  const double t_last = main.series.time(main.series.size() - 1);
  normalize(last);
  EvolutionConfig tail = e;
  tail.steps = 2;
  tail.save_every = 1;
  tail.save_from = 0;
  const Evolution<V> window = evolve(last, tail);
  out.max_norm_drift = std::max(out.max_norm_drift, window.max_norm_drift);
  if (window.aborted) {
    out.aborted = true;
    return out;
  }
  SnapshotSeries<V> psi;
  for (std::size_t k = 0; k < window.series.size(); ++k) psi.push_back(t_last + window.series.time(k), window.series[k]);
  analyse(cfg, psi, e.potential, out);

  if (with_trajectories && !cfg.trajectories.seeds.empty()) {
    SnapshotSeries<Vec3> vel;
    for (std::size_t k = 0; k < main.series.size(); ++k) vel.push_back(main.series.time(k), velocity(cfg, main.series[k]));
    out.trajectories =
        integrate_trajectories(vel, cfg.trajectories.seeds, cfg.trajectories.dt.value_or(cfg.dt));
  }
  return out;
}

std::vector<std::string> enabled_checks(const ScenarioConfig& cfg) {
  std::vector<std::string> out;
  for (const std::string& name : check_names()) {
    if (enabled(cfg, name)) out.push_back(name);
  }
  return out;
}

std::vector<std::string> sweep_checks(const ScenarioConfig& cfg) {
  return cfg.convergence.checks.empty() ? enabled_checks(cfg) : cfg.convergence.checks;
}

bool is_agreement(const std::string& name) {
  return name == "momentum_agreement" || name == "energy_agreement" || name == "quantum_split" || name == "current";
}

}  // namespace

ScenarioConfig refine(const ScenarioConfig& cfg, std::size_t level) {
  if (level == 0) return cfg;
  if (cfg.potential.kind == PotentialSpec::Kind::table) {
    throw std::invalid_argument("a tabulated potential cannot be refined");
  }
  const std::size_t f = pow_size(2, level);
  const std::size_t f2 = f * f;
  ScenarioConfig out = cfg;
  std::vector<Axis> axes;
  for (int a = 0; a < cfg.grid.dim(); ++a) {
    Axis ax = cfg.grid.axis(a);
    ax.count = cfg.grid.boundary() == Boundary::periodic ? ax.count * f : (ax.count - 1) * f + 1;
    axes.push_back(ax);
  }
  out.grid = Grid(std::move(axes), cfg.grid.boundary());
  out.dt = cfg.dt / static_cast<double>(f2);
  out.steps = cfg.steps * f2;
  out.save_every = cfg.save_every * f2;
  out.boundary_layer = cfg.boundary_layer * f;
  if (out.trajectories.dt) *out.trajectories.dt /= static_cast<double>(f2);
  return out;
}

LevelResult run_level(const ScenarioConfig& cfg, bool with_trajectories) {
  if (cfg.particle == Particle::schrodinger) {
    return run_typed(cfg, sample(*cfg.scalar_state, cfg.grid, 0.0), with_trajectories);
  }
  return run_typed(cfg, sample(*cfg.pauli_state, cfg.grid, 0.0), with_trajectories);
}

double tolerance(const ScenarioConfig& cfg, const std::string& check, double h, double dt) {
  const CheckSpec& spec = cfg.checks.at(check);
  const double scale = check_is_temporal(check) ? h * h + dt * dt : h * h;
  return spec.factor * spec.c * scale;
}

bool SweepTable::passed() const noexcept {
  if (aborted) return false;
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
}

std::string SweepTable::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["slope_band"] = {slope_lo, slope_hi};
  j["aborted"] = aborted;
  j["passed"] = passed();
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    rs.push_back({{"check", r.check},
                  {"errors", r.errors},
                  {"spacings", r.spacings},
                  {"slopes", r.slopes},
                  {"passed", r.passed}});
  }
  j["rows"] = rs;
  return j.dump(2) + "\n";
}

std::string SweepTable::to_text() const {
  std::ostringstream out;
  out << "scenario " << scenario << ", slope band [" << slope_lo << ", " << slope_hi << "]\n";
  if (aborted) out << "run aborted: norm drift exceeded the limit\n";
  for (const SweepRow& r : rows) {
    out << r.check << (r.passed ? "" : "  FAIL") << "\n";
    for (std::size_t i = 0; i < r.errors.size(); ++i) {
      out << "  h " << std::setw(12) << std::setprecision(5) << r.spacings[i] << "  max_abs " << std::setw(12)
          << r.errors[i];
      if (i > 0) out << "  slope " << std::fixed << std::setprecision(3) << r.slopes[i - 1] << std::defaultfloat;
      out << "\n";
    }
  }
  return out.str();
}

SweepTable sweep(const ScenarioConfig& cfg, std::size_t levels) {
  if (levels < 3) throw std::invalid_argument("a sweep needs at least 3 levels");
  SweepTable table{cfg.name, cfg.convergence.slope_lo, cfg.convergence.slope_hi, {}, false};
  const std::vector<std::string> names = sweep_checks(cfg);
  for (const std::string& n : names) table.rows.push_back({n, {}, {}, {}, true});
  for (std::size_t l = 0; l < levels; ++l) {
    const LevelResult r = run_level(refine(cfg, l), false);
    if (r.aborted) {
      table.aborted = true;
      return table;
    }
    for (SweepRow& row : table.rows) {
      row.errors.push_back(r.stats.at(row.check).max_abs);
      row.spacings.push_back(r.h);
    }
  }
  for (SweepRow& row : table.rows) {
    row.slopes = convergence_slopes(row.errors, row.spacings);
    for (double s : row.slopes) row.passed = row.passed && s >= table.slope_lo && s <= table.slope_hi;
  }
  return table;
}

RunReport build_report(const ScenarioConfig& cfg, const LevelResult& base) {
  RunReport report(cfg.name);
  report.add_value("h", base.h);
  report.add_value("dt", base.dt);
  report.add_value("max_norm_drift", base.max_norm_drift);
  report.add_flag("norm_drift", !base.aborted && base.max_norm_drift <= cfg.abort_drift,
                  base.aborted ? "run aborted: norm drift exceeded the limit" : "within limit");
  for (const std::string& name : enabled_checks(cfg)) {
    if (base.aborted) {
      report.add_flag(name, false, "not evaluated: run aborted");
      continue;
    }
    const double tol = tolerance(cfg, name, base.h, base.dt);
    if (is_agreement(name)) {
      report.add_agreement(name, base.stats.at(name), tol);
    } else {
      report.add_residual(name, base.stats.at(name), tol);
    }
  }
  if (base.trajectories) {
    const TrajectorySet& t = *base.trajectories;
    report.add_value("trajectory_seeds", static_cast<double>(t.seeds.size()));
    report.add_value("trajectories_truncated",
                     static_cast<double>(std::count(t.truncated.begin(), t.truncated.end(), true)));
    if (base.grid.dim() == 1) {
      const auto crossing = first_crossing(t);
      report.add_flag("trajectory_order", !crossing,
                      crossing ? "paths cross at output step " + std::to_string(*crossing) : "no crossings");
    }
  }
  if (!base.aborted && cfg.convergence.levels >= 3) {
    const SweepTable table = sweep(cfg, cfg.convergence.levels);
    if (table.aborted) {
      report.add_flag("convergence", false, "a refinement level aborted");
    } else {
      for (const SweepRow& row : table.rows) {
        report.add_slopes(row.check + "_slope", row.errors, row.spacings, table.slope_lo, table.slope_hi);
      }
    }
  }
  return report;
}

RunOutcome run(const ScenarioConfig& cfg, const std::filesystem::path& out) {
  const LevelResult base = run_level(cfg, true);
  RunReport report = build_report(cfg, base);

  std::filesystem::create_directories(out);
  {
    std::ofstream f(out / "fields.csv");
    if (!base.aborted) write_field_csv(f, base.grid, base.columns);
  }
  {
    std::ofstream f(out / "trajectories.csv");
    write_trajectory_csv(f, base.trajectories.value_or(TrajectorySet{}), base.grid.dim());
  }
  {
    std::ofstream f(out / "report.json");
    f << report.to_json();
  }
  return {std::move(report), out};
}

}  // namespace cliffqm::harness
