// Copyright 2026 The cliffqm Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace cliffqm::harness {

namespace {

const std::vector<std::string> kChecks{"qhj",           "continuity",     "momentum_agreement",
                                       "energy_agreement", "quantum_split", "spin_transport",
                                       "spin_norm",     "current"};

std::string where(const std::string& source, const YAML::Node& node) {
  const YAML::Mark m = node.Mark();
  if (m.is_null()) return source;
  return source + ":" + std::to_string(m.line + 1);
}

// Thin wrapper that tracks the file name and rejects unknown keys.
class Reader {
 public:
  Reader(std::string source, YAML::Node node, std::string path)
      : source_(std::move(source)), node_(std::move(node)), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& msg) const { fail_at(node_, msg); }
  [[noreturn]] void fail_at(const YAML::Node& n, const std::string& msg) const {
    throw ConfigError(where(source_, n) + ": " + (path_.empty() ? "" : path_ + ": ") + msg);
  }

  void require_map() const {
    if (!node_.IsMap()) fail("expected a mapping");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    require_map();
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!ok.count(key)) fail_at(kv.first, "unknown key '" + key + "'");
    }
  }

  [[nodiscard]] bool has(const std::string& key) const { return node_.IsMap() && node_[key]; }

  [[nodiscard]] Reader child(const std::string& key) const {
    if (!has(key)) fail("missing key '" + key + "'");
    return Reader(source_, node_[key], join(key));
  }

  [[nodiscard]] const YAML::Node& node() const noexcept { return node_; }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }

  template <class T>
  [[nodiscard]] T get(const std::string& key) const {
    const Reader c = child(key);
    return c.as<T>();
  }

  template <class T>
  [[nodiscard]] T get_or(const std::string& key, T fallback) const {
    return has(key) ? get<T>(key) : fallback;
  }

  template <class T>
  [[nodiscard]] T as() const {
    if (!node_.IsScalar()) fail("expected a scalar");
    try {
      return node_.as<T>();
    } catch (const YAML::Exception&) {
      fail("cannot read '" + node_.Scalar() + "'");
    }
  }

  [[nodiscard]] double number(const std::string& key) const {
    const double v = get<double>(key);
    if (!std::isfinite(v)) child(key).fail("must be finite");
    return v;
  }

  [[nodiscard]] double positive(const std::string& key) const {
    const double v = number(key);
    if (!(v > 0.0)) child(key).fail("must be positive");
    return v;
  }

  [[nodiscard]] std::vector<double> numbers() const {
    if (!node_.IsSequence()) fail("expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < node_.size(); ++i) out.push_back(Reader(source_, node_[i], path_).as<double>());
    return out;
  }

  [[nodiscard]] Vec3 vec(const std::string& key, int dim) const {
    const Reader c = child(key);
    const std::vector<double> v = c.numbers();
    if (static_cast<int>(v.size()) != dim) {
      c.fail("expected " + std::to_string(dim) + " components, got " + std::to_string(v.size()));
    }
    Vec3 out;
    for (int a = 0; a < dim; ++a) out[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(a)];
    return out;
  }

  [[nodiscard]] complex complex_number(const std::string& key) const {
    const Reader c = child(key);
    const std::vector<double> v = c.numbers();
    if (v.size() != 2) c.fail("expected [re, im]");
    return {v[0], v[1]};
  }

 private:
  [[nodiscard]] std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  std::string source_;
  YAML::Node node_;
  std::string path_;
};

Grid read_grid(const Reader& r) {
  r.allow_only({"boundary", "axes"});
  Boundary boundary = Boundary::clamped;
  try {
    boundary = boundary_from_string(r.get<std::string>("boundary"));
  } catch (const std::invalid_argument& e) {
    r.child("boundary").fail(e.what());
  }
  const Reader axes = r.child("axes");
  if (!axes.node().IsSequence() || axes.node().size() < 1 || axes.node().size() > 3) {
    axes.fail("expected 1 to 3 axes");
  }
  std::vector<Axis> out;
  for (std::size_t i = 0; i < axes.node().size(); ++i) {
    const Reader a(r.source(), axes.node()[i], "grid.axes[" + std::to_string(i) + "]");
    a.allow_only({"min", "max", "count"});
    Axis ax{a.number("min"), a.number("max"), a.get<std::size_t>("count")};
    if (!(ax.max > ax.min)) a.fail("max must exceed min");
    if (ax.count < Grid::kMinPoints) a.fail("count must be at least " + std::to_string(Grid::kMinPoints));
    out.push_back(ax);
  }
  return Grid(std::move(out), boundary);
}

Wave read_wave(const Reader& r, int dim) {
  r.allow_only({"c0", "amplitude", "k", "omega", "phase"});
  Wave w;
  w.c0 = r.has("c0") ? r.number("c0") : 0.0;
  w.amplitude = r.has("amplitude") ? r.number("amplitude") : 0.0;
  if (r.has("k")) w.k = r.vec("k", dim);
  w.omega = r.has("omega") ? r.number("omega") : 0.0;
  w.phase = r.has("phase") ? r.number("phase") : 0.0;
  return w;
}

ScalarState read_scalar(const Reader& r, int dim, double mass) {
  const auto kind = r.get<std::string>("kind");
  if (kind == "plane_wave") {
    r.allow_only({"kind", "amplitude", "k"});
    return PlaneWave{r.has("amplitude") ? r.complex_number("amplitude") : complex{1.0, 0.0}, r.vec("k", dim), mass};
  }
  if (kind == "gaussian") {
    r.allow_only({"kind", "sigma", "x0", "k0"});
    return GaussianPacket{r.positive("sigma"), r.vec("x0", dim), r.vec("k0", dim), mass};
  }
  if (kind == "harmonic_ground") {
    r.allow_only({"kind", "omega"});
    return HarmonicGroundState{r.positive("omega"), mass};
  }
  r.child("kind").fail("unknown scalar state '" + kind + "'");
}

PauliState read_pauli(const Reader& r, int dim, double mass) {
  const auto kind = r.get<std::string>("kind");
  if (kind == "pauli_superposition") {
    r.allow_only({"kind", "c1", "first", "c2", "second"});
    return PauliSuperposition{r.complex_number("c1"), read_scalar(r.child("first"), dim, mass),
                              r.complex_number("c2"), read_scalar(r.child("second"), dim, mass)};
  }
  if (kind == "euler_texture") {
    r.allow_only({"kind", "theta", "phi", "chi", "amplitude", "envelope_sigma", "envelope_center"});
    EulerTexture t;
    if (r.has("theta")) t.theta = read_wave(r.child("theta"), dim);
    if (r.has("phi")) t.phi = read_wave(r.child("phi"), dim);
    if (r.has("chi")) t.chi = read_wave(r.child("chi"), dim);
    if (r.has("amplitude")) t.amplitude = read_wave(r.child("amplitude"), dim);
    if (r.has("envelope_sigma")) t.envelope_sigma = r.positive("envelope_sigma");
    if (r.has("envelope_center")) t.envelope_center = r.vec("envelope_center", dim);
    return t;
  }
  r.child("kind").fail("unknown Pauli state '" + kind + "'");
}

// Gaussian packets must sit at least 6 sigma from a clamped edge.
void check_margin(const Reader& r, const ScalarState& s, const Grid& g) {
  const auto* p = std::get_if<GaussianPacket>(&s);
  if (!p || g.boundary() != Boundary::clamped) return;
  for (int a = 0; a < g.dim(); ++a) {
    const double x = p->x0[static_cast<std::size_t>(a)];
    if (x - 6 * p->sigma < g.axis(a).min || x + 6 * p->sigma > g.axis(a).max) {
      r.fail("Gaussian packet does not fit the grid with a 6 sigma margin on axis " + std::to_string(a));
    }
  }
}

void check_inside(const Reader& r, const Vec3& s, const Grid& g) {
  for (int a = 0; a < g.dim(); ++a) {
    const double x = s[static_cast<std::size_t>(a)];
    if (x < g.axis(a).min || x > g.axis(a).max) r.fail("trajectory seed lies outside the grid");
  }
}

std::vector<Vec3> read_seeds(const Reader& r, const Grid& g) {
  const int dim = g.dim();
  std::vector<Vec3> seeds;
  if (r.has("points")) {
    const Reader pts = r.child("points");
    if (!pts.node().IsSequence()) pts.fail("expected a list of points");
    for (std::size_t i = 0; i < pts.node().size(); ++i) {
      const Reader p(r.source(), pts.node()[i], "trajectories.points");
      const std::vector<double> v = p.numbers();
      if (static_cast<int>(v.size()) != dim) p.fail("expected " + std::to_string(dim) + " components");
      Vec3 s;
      for (int a = 0; a < dim; ++a) s[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(a)];
      seeds.push_back(s);
    }
  }
  if (r.has("line")) {
    const Reader l = r.child("line");
    l.allow_only({"from", "to", "count"});
    const Vec3 a = l.vec("from", dim), b = l.vec("to", dim);
    const auto n = l.get<std::size_t>("count");
    if (n < 1) l.fail("count must be positive");
    // Cell-centred so the end points are never exactly on a clamped edge.
    for (std::size_t i = 0; i < n; ++i) seeds.push_back(a + (b - a) * ((static_cast<double>(i) + 0.5) / n));
  }
  if (r.has("random")) {
    const Reader q = r.child("random");
    q.allow_only({"count", "center", "spread", "rng_seed"});
    const auto n = q.get<std::size_t>("count");
    const Vec3 c = q.vec("center", dim), w = q.vec("spread", dim);
    std::mt19937_64 rng(q.get<std::uint64_t>("rng_seed"));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      Vec3 s;
      for (int a = 0; a < dim; ++a) {
        const auto ua = static_cast<std::size_t>(a);
        s[ua] = c[ua] + w[ua] * u(rng);
      }
      seeds.push_back(s);
    }
  }
  for (const Vec3& s : seeds) check_inside(r, s, g);
  return seeds;
}

ScenarioConfig read_config(const Reader& root) {
  root.allow_only({"schema_version", "name", "description", "particle", "mass", "state", "grid", "potential",
                   "evolution", "analysis", "trajectories", "checks", "convergence"});
  const int version = root.get<int>("schema_version");
  if (version != kSchemaVersion) {
    root.child("schema_version").fail("unsupported schema_version " + std::to_string(version));
  }
  ScenarioConfig cfg;
  cfg.name = root.get<std::string>("name");
  if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos) {
    root.child("name").fail("name must be a non-empty file-name-safe string");
  }
  cfg.description = root.get_or<std::string>("description", "");
  const auto particle = root.get<std::string>("particle");
  if (particle == "schrodinger") {
    cfg.particle = Particle::schrodinger;
  } else if (particle == "pauli") {
    cfg.particle = Particle::pauli;
  } else {
    root.child("particle").fail("particle must be schrodinger or pauli");
  }
  cfg.mass = root.has("mass") ? root.positive("mass") : 1.0;
  cfg.grid = read_grid(root.child("grid"));
  const int dim = cfg.grid.dim();

  const Reader state = root.child("state");
  if (cfg.particle == Particle::schrodinger) {
    cfg.scalar_state = read_scalar(state, dim, cfg.mass);
    check_margin(state, *cfg.scalar_state, cfg.grid);
  } else {
    cfg.pauli_state = read_pauli(state, dim, cfg.mass);
    if (const auto* s = std::get_if<PauliSuperposition>(&*cfg.pauli_state)) {
      check_margin(state.child("first"), s->first, cfg.grid);
      check_margin(state.child("second"), s->second, cfg.grid);
    }
  }

  if (root.has("potential")) {
    const Reader p = root.child("potential");
    const auto kind = p.get<std::string>("kind");
    if (kind == "none") {
      p.allow_only({"kind"});
    } else if (kind == "harmonic") {
      p.allow_only({"kind", "omega"});
      cfg.potential.kind = PotentialSpec::Kind::harmonic;
      cfg.potential.omega = p.positive("omega");
    } else if (kind == "table") {
      p.allow_only({"kind", "values"});
      cfg.potential.kind = PotentialSpec::Kind::table;
      cfg.potential.table = p.child("values").numbers();
      if (cfg.potential.table.size() != cfg.grid.size()) {
        p.child("values").fail("expected " + std::to_string(cfg.grid.size()) + " values, one per grid point");
      }
    } else {
      p.child("kind").fail("potential kind must be none, harmonic or table");
    }
  }

  const Reader ev = root.child("evolution");
  ev.allow_only({"scheme", "dt", "steps", "save_every", "abort_drift"});
  if (ev.has("scheme")) {
    try {
      cfg.scheme = scheme_from_string(ev.get<std::string>("scheme"));
    } catch (const std::invalid_argument& e) {
      ev.child("scheme").fail(e.what());
    }
  }
  if (cfg.scheme == Scheme::split_step && cfg.grid.boundary() != Boundary::periodic) {
    ev.child("scheme").fail("split_step needs a periodic grid");
  }
  cfg.dt = ev.positive("dt");
  cfg.steps = ev.get<std::size_t>("steps");
  cfg.save_every = ev.get_or<std::size_t>("save_every", 1);
  if (cfg.save_every < 1) ev.child("save_every").fail("must be at least 1");
  if (cfg.steps < cfg.save_every || cfg.steps % cfg.save_every != 0) {
    ev.child("steps").fail("must be a positive multiple of save_every");
  }
  cfg.abort_drift = ev.has("abort_drift") ? ev.positive("abort_drift") : 1e-4;

  if (root.has("analysis")) {
    const Reader a = root.child("analysis");
    a.allow_only({"boundary_layer"});
    cfg.boundary_layer = a.get_or<std::size_t>("boundary_layer", 2);
  }

  if (root.has("trajectories")) {
    const Reader t = root.child("trajectories");
    t.allow_only({"points", "line", "random", "dt"});
    cfg.trajectories.seeds = read_seeds(t, cfg.grid);
    if (t.has("dt")) cfg.trajectories.dt = t.positive("dt");
  }

  if (root.has("checks")) {
    const Reader c = root.child("checks");
    c.require_map();
    for (const auto& kv : c.node()) {
      const auto key = kv.first.as<std::string>();
      if (std::find(kChecks.begin(), kChecks.end(), key) == kChecks.end()) {
        c.fail_at(kv.first, "unknown check '" + key + "'");
      }
      if (cfg.particle == Particle::schrodinger && check_is_pauli_only(key)) {
        c.fail_at(kv.first, "check '" + key + "' needs particle: pauli");
      }
      const Reader one(c.source(), kv.second, "checks." + key);
      one.allow_only({"C", "factor", "enabled"});
      CheckSpec spec;
      spec.c = one.has("C") ? one.positive("C") : 1.0;
      spec.factor = one.has("factor") ? one.positive("factor") : 5.0;
      spec.enabled = one.get_or<bool>("enabled", true);
      cfg.checks[key] = spec;
    }
  }

  if (root.has("convergence")) {
    const Reader c = root.child("convergence");
    c.allow_only({"levels", "slope", "checks"});
    cfg.convergence.levels = c.get_or<std::size_t>("levels", 0);
    if (cfg.convergence.levels != 0 && cfg.convergence.levels < 3) c.child("levels").fail("need at least 3 levels");
    if (c.has("slope")) {
      const std::vector<double> band = c.child("slope").numbers();
      if (band.size() != 2 || !(band[0] < band[1])) c.child("slope").fail("expected [lo, hi] with lo < hi");
      cfg.convergence.slope_lo = band[0];
      cfg.convergence.slope_hi = band[1];
    }
    if (c.has("checks")) {
      const Reader list = c.child("checks");
      if (!list.node().IsSequence()) list.fail("expected a list of check names");
      for (std::size_t i = 0; i < list.node().size(); ++i) {
        const auto name = Reader(c.source(), list.node()[i], "convergence.checks").as<std::string>();
        const auto it = cfg.checks.find(name);
        if (it == cfg.checks.end() || !it->second.enabled) {
          Reader(c.source(), list.node()[i], "convergence.checks").fail("'" + name + "' is not an enabled check");
        }
        cfg.convergence.checks.push_back(name);
      }
    }
    if (cfg.convergence.levels > 0 && cfg.potential.kind == PotentialSpec::Kind::table) {
      c.fail("a tabulated potential cannot be refined");
    }
  }
  return cfg;
}

}  // namespace

const std::vector<std::string>& check_names() { return kChecks; }

bool check_is_temporal(const std::string& name) {
  return name == "qhj" || name == "continuity" || name == "energy_agreement" || name == "spin_transport" ||
         name == "spin_norm";
}

bool check_is_pauli_only(const std::string& name) {
  return name == "quantum_split" || name == "spin_transport" || name == "spin_norm" || name == "current";
}

ScenarioConfig parse_config(const std::string& text, const std::string& source) {
  YAML::Node doc;
  try {
    doc = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!doc.IsMap()) throw ConfigError(source + ": expected a mapping at the top level");
  try {
    return read_config(Reader(source, doc, ""));
  } catch (const YAML::Exception& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

std::vector<ScenarioSummary> list_scenarios(const std::filesystem::path& dir) {
  std::vector<ScenarioSummary> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".cfg") continue;
    ScenarioSummary s{entry.path().stem().string(), "", entry.path()};
    try {
      const YAML::Node doc = YAML::LoadFile(entry.path().string());
      if (doc["name"]) s.name = doc["name"].as<std::string>();
      if (doc["description"]) s.description = doc["description"].as<std::string>();
    } catch (const YAML::Exception&) {
      s.description = "(unreadable)";
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace cliffqm::harness
