// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffqm/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cliffqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class V, class Mag, class Sq>
ResidualStats stats_of(const GridField<V>& r, double dt, std::size_t layer, Mag&& mag, Sq&& sq) {
  const Grid& g = r.grid();
  ResidualStats s;
  s.h = g.h();
  s.dt = dt;
  std::size_t considered = 0;
  std::size_t masked = 0;
  double sum = 0.0;
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (layer > 0 && g.near_boundary(p, layer)) continue;
    ++considered;
    const double m = mag(r[p]);
    if (!std::isfinite(m)) {
      ++masked;
      continue;
    }
    s.max_abs = std::max(s.max_abs, m);
    sum += sq(r[p]);
  }
  s.points = considered - masked;
  s.masked_fraction = considered == 0 ? 1.0 : static_cast<double>(masked) / static_cast<double>(considered);
  s.l2 = std::sqrt(sum * g.cell_volume());
  if (s.points == 0) s.max_abs = kNaN;
  return s;
}

}  // namespace

ResidualStats residual_stats(const GridField<double>& r, double dt, std::size_t boundary_layer) {
  return stats_of(r, dt, boundary_layer, [](double v) { return std::fabs(v); }, [](double v) { return v * v; });
}

ResidualStats residual_stats(const GridField<Vec3>& r, double dt, std::size_t boundary_layer) {
  return stats_of(r, dt, boundary_layer, [](const Vec3& v) { return max_abs(v); },
                  [](const Vec3& v) { return dot(v, v); });
}

ResidualStats difference_stats(const GridField<double>& a, const GridField<double>& b, double dt,
                               std::size_t boundary_layer) {
  return residual_stats(zip_fields(a, b, [](double x, double y) { return x - y; }), dt, boundary_layer);
}

ResidualStats difference_stats(const GridField<Vec3>& a, const GridField<Vec3>& b, double dt,
                               std::size_t boundary_layer) {
  return residual_stats(zip_fields(a, b, [](const Vec3& x, const Vec3& y) { return x - y; }), dt,
                        boundary_layer);
}

std::vector<double> convergence_slopes(const std::vector<double>& errors) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) out.push_back(std::log2(errors[i] / errors[i + 1]));
  return out;
}

std::vector<double> convergence_slopes(const std::vector<double>& errors, const std::vector<double>& spacings) {
  if (errors.size() != spacings.size()) throw std::invalid_argument("one spacing per error level is required");
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    out.push_back(std::log(errors[i] / errors[i + 1]) / std::log(spacings[i] / spacings[i + 1]));
  }
  return out;
}

RunReport::RunReport(std::string scenario) : scenario_(std::move(scenario)) {}

void RunReport::insert(const std::string& name, Entry entry) {
  for (const auto& [n, e] : entries_) {
    if (n == name) throw std::logic_error("check '" + name + "' reported twice");
  }
  entries_.emplace_back(name, std::move(entry));
}

void RunReport::add_residual(const std::string& name, const ResidualStats& stats, double tolerance) {
  Entry e;
  e.kind = "residual";
  e.passed = stats.max_abs <= tolerance;
  e.numbers = {{"max_abs", stats.max_abs}, {"l2", stats.l2},       {"masked_fraction", stats.masked_fraction},
               {"h", stats.h},             {"dt", stats.dt},       {"tolerance", tolerance}};
  insert(name, std::move(e));
}

void RunReport::add_agreement(const std::string& name, const ResidualStats& stats, double tolerance) {
  add_residual(name, stats, tolerance);
  entries_.back().second.kind = "agreement";
}

void RunReport::add_slopes(const std::string& name, const std::vector<double>& errors,
                           const std::vector<double>& spacings, double lo, double hi) {
  Entry e;
  e.kind = "convergence";
  e.series = convergence_slopes(errors, spacings);
  e.passed = !e.series.empty();
  for (double s : e.series) e.passed = e.passed && s >= lo && s <= hi;
  e.numbers = {{"slope_min", lo}, {"slope_max", hi}, {"levels", static_cast<double>(errors.size())}};
  for (std::size_t i = 0; i < errors.size(); ++i) {
    e.numbers["error_" + std::to_string(i)] = errors[i];
    e.numbers["h_" + std::to_string(i)] = spacings[i];
  }
  e.detail = "slopes";
  insert(name, std::move(e));
}

void RunReport::add_flag(const std::string& name, bool passed, const std::string& detail) {
  Entry e;
  e.kind = "flag";
  e.passed = passed;
  e.detail = detail;
  insert(name, std::move(e));
}

void RunReport::add_value(const std::string& name, double value) {
  Entry e;
  e.kind = "value";
  e.numbers = {{"value", value}};
  insert(name, std::move(e));
}

bool RunReport::passed() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.passed; });
}

std::vector<std::string> RunReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_) {
    if (!e.passed) out.push_back(name);
  }
  return out;
}

std::string RunReport::to_json() const {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, e] : entries_) {
    nlohmann::json j;
    j["kind"] = e.kind;
    j["pass"] = e.passed;
    for (const auto& [k, v] : e.numbers) {
      if (k == "h" || k == "dt") {
        j["grid"][k] = v;
      } else {
        j[k] = v;
      }
    }
    if (e.kind == "convergence") j["slopes"] = e.series;
    if (e.kind == "flag") j["detail"] = e.detail;
    checks[name] = std::move(j);
  }
  nlohmann::json doc;
  doc["scenario"] = scenario_;
  doc["pass"] = passed();
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace cliffqm
