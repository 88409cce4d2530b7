// Copyright 2026 The leorelay Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leorelay/leorelay.h"

namespace leorelay_cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr int kSignificantDigits = 12;

double rad(double deg) { return deg * kPi / 180.0; }
double deg(double r) { return r * 180.0 / kPi; }

class Failure : public std::runtime_error {
 public:
  Failure(int exit_code, const std::string& what) : std::runtime_error(what), code_(exit_code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

void check(lr_status s) {
  if (s == LR_OK) return;
  const int code = s == LR_ERR_INTERNAL ? kExitInvariant : kExitUsage;
  throw Failure(code, std::string(lr_status_name(s)) + " error: " + lr_last_error());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Scenario = std::unique_ptr<lr_scenario, Deleter<lr_scenario, lr_scenario_destroy>>;
using Curve = std::unique_ptr<lr_curve, Deleter<lr_curve, lr_curve_destroy>>;
using Sample = std::unique_ptr<lr_sample, Deleter<lr_sample, lr_sample_destroy>>;

// Locale-free, fixed precision, so identical inputs give identical bytes.
std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, kSignificantDigits);
  return std::string(buf, r.ptr);
}

// The value JSON will print for a 12-digit rendering of v.
json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  double back = 0;
  const std::string s = format_double(v);
  std::from_chars(s.data(), s.data() + s.size(), back);
  return back;
}

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Artifact {
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_double(*d);
  if (auto i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return json_number(*d);
  if (auto i = std::get_if<std::int64_t>(&c)) return *i;
  if (auto b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const json& v = it.value();
    if (v.is_object()) {
      flatten(v, key, os);
    } else if (v.is_string()) {
      os << "# " << key << ": " << v.get<std::string>() << '\n';
    } else if (v.is_number_float()) {
      os << "# " << key << ": " << format_double(v.get<double>()) << '\n';
    } else {
      os << "# " << key << ": " << v.dump() << '\n';
    }
  }
}

std::string render(const Artifact& a, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["meta"] = a.meta;
    json data = json::array();
    for (const auto& row : a.rows) {
      json r = json::object();
      for (std::size_t i = 0; i < a.columns.size(); ++i) r[a.columns[i]] = cell_json(row[i]);
      data.push_back(std::move(r));
    }
    doc["data"] = std::move(data);
    os << doc.dump(2) << '\n';
    return os.str();
  }
  flatten(a.meta, "", os);
  for (std::size_t i = 0; i < a.columns.size(); ++i) os << (i ? "," : "") << a.columns[i];
  os << '\n';
  for (const auto& row : a.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

struct RunConfig {
  std::optional<double> altitude_km;
  std::optional<double> shell_radius_km;
  double earth_radius_km = 6371.0;
  double theta_m1_deg = 45.0;
  double theta_m2_deg = 45.0;
  std::optional<double> elevation_deg;
  double distance_km = 3000.0;
  std::uint64_t n_sat = 3000;
  std::size_t grid = 101;
  std::uint64_t trials = 200000;
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 4096;
  unsigned workers = 0;
  std::string format = "csv";
  std::string convention = "defective";
  std::string split = "closed-form";
  std::string output;
  double gap_threshold = 0.03;

  // outage
  std::optional<double> d_min, d_max;
  double d_step = 500.0;
  bool with_mc = false;
  // multihop
  std::uint32_t hops = 1;
  std::optional<double> epsilon;
  std::uint32_t max_hops = 64;
  // area
  double theta_d_deg = 45.0;
  double theta_o_deg = 22.5;
  std::optional<double> radius_km;
};

double shell_radius(const RunConfig& c) {
  if (c.shell_radius_km) return *c.shell_radius_km;
  return c.earth_radius_km + c.altitude_km.value_or(550.0);
}

lr_convention convention_of(const RunConfig& c) {
  return c.convention == "normalized" ? LR_NORMALIZED : LR_DEFECTIVE;
}

lr_solver solver_of(const RunConfig& c) {
  return c.split == "root-solve" ? LR_ROOT_SOLVE : LR_CLOSED_FORM;
}

lr_mc_config mc_of(const RunConfig& c) {
  lr_mc_config m;
  m.trials = c.trials;
  m.seed = c.seed;
  m.chunk_size = c.chunk_size;
  m.workers = c.workers;
  return m;
}

// Dome angles in radians; derived from the elevation mask when one is given.
std::pair<double, double> dome_angles(const RunConfig& c) {
  if (c.elevation_deg) {
    double t = 0;
    check(lr_max_dome_angle(c.earth_radius_km, shell_radius(c), rad(*c.elevation_deg), &t));
    return {t, t};
  }
  return {rad(c.theta_m1_deg), rad(c.theta_m2_deg)};
}

Scenario make_scenario(const RunConfig& c) {
  lr_params p;
  lr_params_default(&p);
  p.earth_radius_km = c.earth_radius_km;
  p.shell_radius_km = shell_radius(c);
  std::tie(p.theta_m1_rad, p.theta_m2_rad) = dome_angles(c);
  p.distance_km = c.distance_km;
  p.n_sat = c.n_sat;
  lr_scenario* raw = nullptr;
  check(lr_scenario_create(&p, &raw));
  return Scenario(raw);
}

// Full resolved configuration. Worker count is left out on purpose: it is a
// scheduling knob and must not change the artifact bytes.
json config_meta(const RunConfig& c, bool with_mc) {
  const auto [t1, t2] = dome_angles(c);
  json j;
  j["earth_radius_km"] = json_number(c.earth_radius_km);
  j["shell_radius_km"] = json_number(shell_radius(c));
  j["altitude_km"] = json_number(shell_radius(c) - c.earth_radius_km);
  j["theta_m1_rad"] = json_number(t1);
  j["theta_m2_rad"] = json_number(t2);
  if (c.elevation_deg) j["elevation_deg"] = json_number(*c.elevation_deg);
  j["distance_km"] = json_number(c.distance_km);
  j["n_sat"] = c.n_sat;
  j["convention"] = c.convention;
  j["split"] = c.split;
  if (with_mc) {
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["chunk_size"] = c.chunk_size;
  }
  return j;
}

json base_meta(const char* command, const RunConfig& c, bool with_mc) {
  json m;
  m["tool"] = "leorelay";
  m["version"] = lr_version();
  m["command"] = command;
  m["config"] = config_meta(c, with_mc);
  return m;
}

void add_feasibility(json& meta, const lr_scenario* sc) {
  int intersects = 0, los_valid = 0;
  double margin = 0;
  check(lr_feasibility(sc, &intersects, &los_valid, &margin));
  meta["los_valid"] = los_valid != 0;
  meta["feasibility_margin_rad"] = json_number(margin);
}

void require_valid(const lr_curve* curve) {
  if (const char* v = lr_curve_violation(curve))
    throw Failure(kExitInvariant, std::string("curve invariant violated: ") + v);
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Failure(kExitInvariant,
                  std::string(what) + " outside [0, 1]: " + format_double(p));
}

std::vector<double> angle_grid(const lr_scenario* sc, std::size_t n) {
  double lo = 0, hi = 0;
  check(lr_contact_domain(sc, &lo, &hi));
  std::vector<double> g(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

Artifact cmd_cdf(const RunConfig& c) {
  Scenario sc = make_scenario(c);
  lr_curve* raw = nullptr;
  check(lr_curve_analytic_grid(sc.get(), c.grid, convention_of(c), solver_of(c), &raw));
  Curve curve(raw);
  require_valid(curve.get());

  Artifact a;
  a.meta = base_meta("cdf", c, false);
  add_feasibility(a.meta, sc.get());
  double lo = 0, hi = 0, mass = 0;
  check(lr_contact_domain(sc.get(), &lo, &hi));
  check(lr_cdf(sc.get(), hi, LR_DEFECTIVE, solver_of(c), &mass));
  a.meta["domain_lower_rad"] = json_number(lo);
  a.meta["domain_upper_rad"] = json_number(hi);
  a.meta["relay_probability"] = json_number(mass);
  a.columns = {"theta_rad", "theta_deg", "cdf"};
  for (std::size_t i = 0; i < lr_curve_size(curve.get()); ++i) {
    double x = 0, p = 0;
    check(lr_curve_point(curve.get(), i, &x, &p));
    a.rows.push_back({x, deg(x), p});
  }
  return a;
}

std::vector<double> distance_sweep(const RunConfig& c) {
  if (!c.d_min && !c.d_max) return {c.distance_km};
  if (!c.d_min || !c.d_max) throw Failure(kExitUsage, "--d-min and --d-max go together");
  if (!(c.d_step > 0.0)) throw Failure(kExitUsage, "--d-step must be positive");
  if (*c.d_max < *c.d_min) throw Failure(kExitUsage, "--d-max is below --d-min");
  const auto n = static_cast<std::size_t>(std::floor((*c.d_max - *c.d_min) / c.d_step + 1e-9)) + 1;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = *c.d_min + c.d_step * static_cast<double>(i);
  return d;
}

Artifact cmd_outage(const RunConfig& c) {
  Scenario sc = make_scenario(c);
  Artifact a;
  a.meta = base_meta("outage", c, c.with_mc);
  a.columns = {"d_km", "p_outage", "infeasible"};
  if (c.with_mc) {
    a.columns.push_back("p_outage_mc");
    a.columns.push_back("mc_std_error");
  }
  const lr_mc_config mc = mc_of(c);
  bool monotone = true;
  double prev = -1.0;
  for (double d : distance_sweep(c)) {
    check(lr_scenario_set_distance(sc.get(), d));
    double p = 0;
    int infeasible = 0;
    check(lr_single_outage(sc.get(), solver_of(c), &p, &infeasible));
    require_probability(p, "outage probability");
    if (p < prev) monotone = false;
    prev = p;
    std::vector<Cell> row{d, p, infeasible != 0};
    if (c.with_mc) {
      lr_estimate e;
      check(lr_mc_outage(sc.get(), &mc, &e));
      row.push_back(e.estimate);
      row.push_back(e.std_error);
    }
    a.rows.push_back(std::move(row));
  }
  a.meta["p_outage_nondecreasing_in_d"] = monotone;
  return a;
}

Artifact cmd_multihop(const RunConfig& c) {
  Scenario sc = make_scenario(c);
  Artifact a;
  a.meta = base_meta("multihop", c, c.with_mc);
  a.columns = {"n_hops", "p_outage"};
  if (c.with_mc) {
    a.columns.push_back("p_outage_mc");
    a.columns.push_back("mc_std_error");
  }
  std::vector<double> sweep;
  if (c.epsilon) {
    sweep.resize(c.max_hops);
    std::uint32_t best = 0;
    check(lr_min_hops(sc.get(), *c.epsilon, c.max_hops, solver_of(c), &best, sweep.data()));
    a.meta["target_outage"] = json_number(*c.epsilon);
    a.meta["max_hops"] = c.max_hops;
    a.meta["target_met"] = best != 0;
    if (best != 0) a.meta["min_hops"] = best;
  } else {
    if (c.hops < 1) throw Failure(kExitUsage, "--hops must be >= 1");
    for (std::uint32_t n = 1; n <= c.hops; ++n) {
      double p = 0;
      int infeasible = 0;
      check(lr_multi_outage(sc.get(), n, solver_of(c), &p, &infeasible));
      sweep.push_back(p);
    }
  }
  const lr_mc_config mc = mc_of(c);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    require_probability(sweep[i], "outage probability");
    const auto n = static_cast<std::uint32_t>(i + 1);
    std::vector<Cell> row{static_cast<std::int64_t>(n), sweep[i]};
    if (c.with_mc) {
      lr_estimate e;
      check(lr_mc_multi_outage(sc.get(), n, LR_HOPS_INDEPENDENT, &mc, &e));
      row.push_back(e.estimate);
      row.push_back(e.std_error);
    }
    a.rows.push_back(std::move(row));
  }
  return a;
}

Sample simulate(const lr_scenario* sc, const RunConfig& c) {
  const lr_mc_config mc = mc_of(c);
  lr_sample* raw = nullptr;
  check(lr_sample_simulate(sc, &mc, &raw));
  return Sample(raw);
}

void add_sample_meta(json& meta, const lr_sample* s) {
  std::uint64_t trials = 0, outages = 0;
  check(lr_sample_counts(s, &trials, &outages));
  meta["mc_trials"] = trials;
  meta["mc_outages"] = outages;
  meta["mc_outage_frequency"] =
      json_number(static_cast<double>(outages) / static_cast<double>(trials));
}

Artifact cmd_simulate(const RunConfig& c) {
  Scenario sc = make_scenario(c);
  const std::vector<double> grid = angle_grid(sc.get(), c.grid);
  Sample sample = simulate(sc.get(), c);
  lr_curve* raw = nullptr;
  check(lr_curve_empirical(sample.get(), grid.data(), grid.size(), convention_of(c), &raw));
  Curve curve(raw);
  require_valid(curve.get());

  Artifact a;
  a.meta = base_meta("simulate", c, true);
  add_sample_meta(a.meta, sample.get());
  a.columns = {"theta_rad", "theta_deg", "cdf_mc", "mc_std_error"};
  for (double t : grid) {
    double p = 0, se = 0;
    check(lr_sample_cdf(sample.get(), t, convention_of(c), &p, &se));
    a.rows.push_back({t, deg(t), p, se});
  }
  return a;
}

Artifact cmd_compare(const RunConfig& c) {
  Scenario sc = make_scenario(c);
  const std::vector<double> grid = angle_grid(sc.get(), c.grid);
  lr_curve* raw = nullptr;
  check(lr_curve_analytic(sc.get(), grid.data(), grid.size(), convention_of(c), solver_of(c),
                          &raw));
  Curve analytic(raw);
  require_valid(analytic.get());
  Sample sample = simulate(sc.get(), c);
  check(lr_curve_empirical(sample.get(), grid.data(), grid.size(), convention_of(c), &raw));
  Curve empirical(raw);
  require_valid(empirical.get());

  Artifact a;
  a.meta = base_meta("compare", c, true);
  add_feasibility(a.meta, sc.get());
  add_sample_meta(a.meta, sample.get());
  a.columns = {"theta_rad", "cdf_analytic", "cdf_mc", "abs_gap", "mc_std_error"};
  double sup_gap = 0, se_max = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double x = 0, fa = 0, fe = 0, se = 0;
    check(lr_curve_point(analytic.get(), i, &x, &fa));
    check(lr_sample_cdf(sample.get(), x, convention_of(c), &fe, &se));
    const double gap = std::abs(fa - fe);
    sup_gap = std::max(sup_gap, gap);
    se_max = std::max(se_max, se);
    a.rows.push_back({x, fa, fe, gap, se});
  }
  double ks = 0;
  check(lr_sample_ks(sample.get(), sc.get(), convention_of(c), solver_of(c), &ks));

  std::uint64_t trials = 0, outages = 0;
  check(lr_sample_counts(sample.get(), &trials, &outages));
  const double n_eff = static_cast<double>(c.convention == "normalized" ? trials - outages : trials);
  // Largest binomial standard error any CDF value can have at this size.
  const double se_scale = n_eff > 0 ? 0.5 / std::sqrt(n_eff) : 1.0;
  const double gap = std::max(sup_gap, ks);
  a.meta["sup_gap_grid"] = json_number(sup_gap);
  a.meta["ks_statistic"] = json_number(ks);
  a.meta["mc_se_max"] = json_number(se_max);
  a.meta["mc_se_scale"] = json_number(se_scale);
  a.meta["gap_threshold"] = json_number(c.gap_threshold);
  // Only gaps that MC noise cannot explain count as breaches.
  a.meta["threshold_breached"] = gap - 3.0 * se_scale > c.gap_threshold;
  return a;
}

Artifact cmd_area(const RunConfig& c) {
  const double radius = c.radius_km.value_or(shell_radius(c));
  const double td = rad(c.theta_d_deg);
  const double to = rad(c.theta_o_deg);
  double s = 0, s_std = 0, s_ref = 0, rel = 0;
  check(lr_slice_area(td, to, radius, &s));
  check(lr_slice_area_check(td, to, radius, &s_std, &s_ref, &rel));

  Artifact a;
  a.meta = base_meta("area", c, c.with_mc);
  a.meta["quadrature_relative_change"] = json_number(rel);
  a.columns = {"theta_d_rad", "theta_o_rad", "radius_km", "area_km2"};
  std::vector<Cell> row{td, to, radius, s};
  if (c.with_mc) {
    const lr_mc_config mc = mc_of(c);
    lr_estimate e;
    check(lr_mc_slice_area(td, to, radius, &mc, &e));
    a.columns.insert(a.columns.end(), {"area_mc_km2", "mc_std_error", "relative_gap"});
    row.push_back(e.estimate);
    row.push_back(e.std_error);
    row.push_back(e.estimate > 0 ? (s - e.estimate) / e.estimate : (s == 0 ? 0.0 : 1.0));
  }
  a.rows.push_back(std::move(row));
  return a;
}

std::string env_name(const std::string& flag) {
  std::string e = "LEORELAY_";
  for (char ch : flag) e += ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  return e;
}

// Config-file reader that yields to environment variables, so the order is
// command line, then environment, then config file, then defaults.
class EnvFirstConfig : public CLI::ConfigBase {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigBase::from_config(input);
    std::erase_if(items, [](const CLI::ConfigItem& item) {
      return std::getenv(env_name(item.name).c_str()) != nullptr;
    });
    return items;
  }
};

template <typename T>
CLI::Option* flag(CLI::App& app, const std::string& name, T& target, const std::string& help) {
  return app.add_option("--" + name, target, help)->envname(env_name(name));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Contact-angle distribution and outage of LEO satellite relays"};
  app.set_version_flag("--version", std::string(lr_version()));
  app.set_config("--config", "", "Read key = value settings (flag names without dashes)");
  app.config_formatter(std::make_shared<EnvFirstConfig>());
  app.require_subcommand(1);
  app.fallthrough();

  auto* alt = flag(app, "altitude-km", c.altitude_km, "Shell altitude above the Earth (default 550)");
  auto* shell = flag(app, "shell-radius-km", c.shell_radius_km, "Orbital shell radius");
  alt->excludes(shell);
  shell->excludes(alt);
  flag(app, "earth-radius-km", c.earth_radius_km, "Earth radius")->capture_default_str();
  auto* m1 = flag(app, "theta-m1-deg", c.theta_m1_deg, "Transmitter maximum dome angle")
                 ->capture_default_str();
  auto* m2 = flag(app, "theta-m2-deg", c.theta_m2_deg, "Receiver maximum dome angle")
                 ->capture_default_str();
  flag(app, "elevation-deg", c.elevation_deg,
       "Derive both dome angles from this minimum elevation")
      ->excludes(m1)
      ->excludes(m2);
  flag(app, "distance-km", c.distance_km, "Transmitter-receiver chord")->capture_default_str();
  flag(app, "n-sat", c.n_sat, "Number of satellites")->capture_default_str();
  flag(app, "grid", c.grid, "Grid points over the angle support")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  flag(app, "trials", c.trials, "Monte-Carlo trials")->capture_default_str();
  flag(app, "seed", c.seed, "Monte-Carlo seed")->capture_default_str();
  flag(app, "chunk-size", c.chunk_size, "Trials per random stream")->capture_default_str();
  flag(app, "workers", c.workers, "Worker threads, 0 for all cores (never changes results)")
      ->capture_default_str();
  flag(app, "format", c.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  flag(app, "convention", c.convention, "CDF convention")
      ->capture_default_str()
      ->check(CLI::IsMember({"defective", "normalized"}));
  flag(app, "split", c.split, "Overlap split solver")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed-form", "root-solve"}));
  flag(app, "output", c.output, "Write the artifact to this file instead of stdout");

  auto* cdf = app.add_subcommand("cdf", "Analytic CDF of the conditional contact angle");
  auto* outage = app.add_subcommand("outage", "Single-relay outage, optionally over a d sweep");
  flag(*outage, "d-min", c.d_min, "Sweep start");
  flag(*outage, "d-max", c.d_max, "Sweep end (inclusive)");
  flag(*outage, "d-step", c.d_step, "Sweep step")->capture_default_str();
  outage->add_flag("--with-mc", c.with_mc, "Add Monte-Carlo outage frequencies");

  auto* multihop = app.add_subcommand("multihop", "Multi-hop outage by hop count");
  auto* hops = flag(*multihop, "hops", c.hops, "List n = 1..hops")->capture_default_str();
  auto* eps = flag(*multihop, "epsilon", c.epsilon, "Find the fewest hops meeting this outage");
  hops->excludes(eps);
  flag(*multihop, "max-hops", c.max_hops, "Search limit with --epsilon")->capture_default_str();
  multihop->add_flag("--with-mc", c.with_mc, "Add Monte-Carlo outage frequencies");

  auto* sim = app.add_subcommand("simulate", "Empirical CDF from Monte Carlo");
  auto* compare = app.add_subcommand("compare", "Analytic vs Monte-Carlo CDF");
  flag(*compare, "gap-threshold", c.gap_threshold, "Flag gaps beyond this (after MC noise)")
      ->capture_default_str();

  auto* area = app.add_subcommand("area", "Cap slice area");
  flag(*area, "theta-d-deg", c.theta_d_deg, "Cap dome angle")->capture_default_str();
  flag(*area, "theta-o-deg", c.theta_o_deg, "Slice dome angle")->capture_default_str();
  flag(*area, "radius-km", c.radius_km, "Sphere radius (default: shell radius)");
  area->add_flag("--with-mc", c.with_mc, "Add a hit-count estimate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Artifact a;
    if (cdf->parsed()) a = cmd_cdf(c);
    else if (outage->parsed()) a = cmd_outage(c);
    else if (multihop->parsed()) a = cmd_multihop(c);
    else if (sim->parsed()) a = cmd_simulate(c);
    else if (compare->parsed()) a = cmd_compare(c);
    else a = cmd_area(c);

    const std::string text = render(a, c.format);
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw Failure(kExitUsage, "cannot open " + c.output + " for writing");
      f << text;
      if (!f) throw Failure(kExitUsage, "failed writing " + c.output);
    }
    return kExitOk;
  } catch (const Failure& f) {
    err << "leorelay: " << f.what() << '\n';
    return f.exit_code();
  } catch (const std::exception& e) {
    err << "leorelay: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace leorelay_cli
