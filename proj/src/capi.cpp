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

#include "leorelay/leorelay.h"

#include <functional>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "monte_carlo.hpp"
#include "outage.hpp"
#include "scenario.hpp"

struct lr_scenario {
  leorelay::RelayScenario value;
  std::string fingerprint;
};

struct lr_curve {
  leorelay::CdfCurve value;
  std::string violation;
};

struct lr_sample {
  leorelay::ContactSample value;
};

namespace {

using leorelay::Errc;

thread_local std::string g_last_error;

lr_status to_status(Errc e) { return static_cast<lr_status>(static_cast<int>(e)); }

// Runs body() and converts any exception into a status plus message.
template <typename Body>
lr_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return LR_OK;
  } catch (const leorelay::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return LR_ERR_INTERNAL;
  }
}

// Distinct status for NULL arguments, so check before entering guarded().
#define LR_REQUIRE(...)                                         \
  do {                                                          \
    if (!all_set(__VA_ARGS__)) {                                \
      g_last_error = "required pointer argument is NULL";       \
      return LR_ERR_NULL;                                       \
    }                                                           \
  } while (0)

template <typename... Ptrs>
bool all_set(const Ptrs*... ptrs) {
  return ((ptrs != nullptr) && ...);
}

leorelay::SplitSolver solver_of(lr_solver s) {
  switch (s) {
    case LR_CLOSED_FORM: return leorelay::SplitSolver::closed_form;
    case LR_ROOT_SOLVE: return leorelay::SplitSolver::root_solve;
  }
  leorelay::fail(Errc::argument, "unknown solver ", static_cast<int>(s));
}

leorelay::CdfConvention convention_of(lr_convention c) {
  switch (c) {
    case LR_DEFECTIVE: return leorelay::CdfConvention::defective;
    case LR_NORMALIZED: return leorelay::CdfConvention::normalized;
  }
  leorelay::fail(Errc::argument, "unknown convention ", static_cast<int>(c));
}

leorelay::CdfOptions options_of(lr_solver s) { return leorelay::CdfOptions{solver_of(s)}; }

leorelay::RelayScenario scenario_of(const lr_params& p) {
  leorelay::RelayScenario s;
  s.geometry.earth_radius_km = p.earth_radius_km;
  s.geometry.shell_radius_km = p.shell_radius_km;
  s.theta_m1_rad = p.theta_m1_rad;
  s.theta_m2_rad = p.theta_m2_rad;
  s.distance_km = p.distance_km;
  s.n_sat = p.n_sat;
  s.geometry.validate();
  s.validate();
  return s;
}

leorelay::McConfig mc_of(const lr_mc_config& c) {
  leorelay::McConfig m;
  m.trials = c.trials;
  m.seed = c.seed;
  m.chunk_size = c.chunk_size;
  m.workers = c.workers;
  m.validate();
  return m;
}

void write(const leorelay::McEstimate& e, lr_estimate* out) {
  out->estimate = e.estimate;
  out->std_error = e.std_error;
  out->trials = e.trials;
  out->seed = e.seed;
}

std::function<double(double)> wrap(lr_function g, void* user) {
  return [g, user](double x) { return g(x, user); };
}

}  // namespace

extern "C" {

const char* lr_version(void) { return LEORELAY_VERSION; }

const char* lr_last_error(void) { return g_last_error.c_str(); }

const char* lr_status_name(lr_status status) {
  switch (status) {
    case LR_OK: return "ok";
    case LR_ERR_DOMAIN: return "domain";
    case LR_ERR_PRECONDITION: return "precondition";
    case LR_ERR_NUMERICAL: return "numerical";
    case LR_ERR_DEGENERATE: return "degenerate";
    case LR_ERR_ARGUMENT: return "argument";
    case LR_ERR_INTERNAL: return "internal";
    case LR_ERR_NULL: return "null";
  }
  return "unknown";
}

void lr_params_default(lr_params* out) {
  if (out == nullptr) return;
  const leorelay::RelayScenario s;
  *out = {s.geometry.earth_radius_km, s.geometry.shell_radius_km, s.theta_m1_rad,
          s.theta_m2_rad, s.distance_km, s.n_sat};
}

void lr_mc_config_default(lr_mc_config* out) {
  if (out == nullptr) return;
  const leorelay::McConfig m;
  *out = {m.trials, m.seed, m.chunk_size, m.workers};
}

lr_status lr_scenario_create(const lr_params* params, lr_scenario** out) {
  LR_REQUIRE(params, out);
  return guarded([&] {
    auto h = std::make_unique<lr_scenario>();
    h->value = scenario_of(*params);
    h->fingerprint = h->value.fingerprint();
    *out = h.release();
  });
}

void lr_scenario_destroy(lr_scenario* scenario) { delete scenario; }

lr_status lr_scenario_get(const lr_scenario* scenario, lr_params* out) {
  LR_REQUIRE(scenario, out);
  const auto& s = scenario->value;
  *out = {s.geometry.earth_radius_km, s.geometry.shell_radius_km, s.theta_m1_rad,
          s.theta_m2_rad, s.distance_km, s.n_sat};
  g_last_error.clear();
  return LR_OK;
}

lr_status lr_scenario_set_distance(lr_scenario* scenario, double distance_km) {
  LR_REQUIRE(scenario);
  return guarded([&] {
    const leorelay::RelayScenario next = scenario->value.with_distance(distance_km);
    next.validate();
    scenario->value = next;
    scenario->fingerprint = next.fingerprint();
  });
}

lr_status lr_scenario_set_n_sat(lr_scenario* scenario, uint64_t n_sat) {
  LR_REQUIRE(scenario);
  return guarded([&] {
    const leorelay::RelayScenario next = scenario->value.with_n_sat(n_sat);
    next.validate();
    scenario->value = next;
    scenario->fingerprint = next.fingerprint();
  });
}

lr_status lr_scenario_fingerprint(const lr_scenario* scenario, const char** out) {
  LR_REQUIRE(scenario, out);
  *out = scenario->fingerprint.c_str();
  g_last_error.clear();
  return LR_OK;
}

lr_status lr_ground_central_angle(const lr_scenario* scenario, double* out) {
  LR_REQUIRE(scenario, out);
  return guarded([&] { *out = scenario->value.ground_central_angle(); });
}

lr_status lr_feasibility(const lr_scenario* scenario, int* intersects, int* los_valid,
                         double* margin_rad) {
  LR_REQUIRE(scenario, intersects, los_valid, margin_rad);
  return guarded([&] {
    const auto f = leorelay::feasibility_check(scenario->value);
    *intersects = f.intersects ? 1 : 0;
    *los_valid = f.los_valid ? 1 : 0;
    *margin_rad = f.margin_rad;
  });
}

lr_status lr_max_dome_angle(double earth_radius_km, double shell_radius_km, double elevation_rad,
                            double* out) {
  LR_REQUIRE(out);
  return guarded([&] {
    leorelay::GeometryConfig g{earth_radius_km, shell_radius_km};
    *out = leorelay::max_dome_angle_from_elevation(g, elevation_rad);
  });
}

lr_status lr_slice_area(double theta_d_rad, double theta_o_rad, double radius_km, double* out) {
  LR_REQUIRE(out);
  return guarded([&] { *out = leorelay::cap_slice_area(theta_d_rad, theta_o_rad, radius_km); });
}

lr_status lr_slice_area_check(double theta_d_rad, double theta_o_rad, double radius_km,
                              double* standard, double* refined, double* relative_change) {
  LR_REQUIRE(standard, refined, relative_change);
  return guarded([&] {
    const auto q = leorelay::cap_slice_area_self_check(theta_d_rad, theta_o_rad, radius_km);
    *standard = q.standard;
    *refined = q.refined;
    *relative_change = q.relative_change;
  });
}

lr_status lr_overlap_split(double theta_d1_rad, double theta_d2_rad, double c_rad,
                           lr_solver solver, lr_split* out) {
  LR_REQUIRE(out);
  return guarded([&] {
    const auto s =
        leorelay::resolve_overlap_split(theta_d1_rad, theta_d2_rad, c_rad, solver_of(solver));
    out->theta_o1_rad = s.theta_o1_rad;
    out->theta_o2_rad = s.theta_o2_rad;
    out->raw_o1_rad = s.raw_o1_rad;
    out->raw_o2_rad = s.raw_o2_rad;
    out->method = static_cast<lr_split_method>(static_cast<int>(s.method));
    out->clamped = s.clamped ? 1 : 0;
  });
}

lr_status lr_contact_domain(const lr_scenario* scenario, double* lower_rad, double* upper_rad) {
  LR_REQUIRE(scenario, lower_rad, upper_rad);
  return guarded([&] {
    const auto d = leorelay::contact_angle_domain(scenario->value);
    *lower_rad = d.lower_rad;
    *upper_rad = d.upper_rad;
  });
}

lr_status lr_overlap_area(const lr_scenario* scenario, double theta_rad, lr_solver solver,
                          double* out) {
  LR_REQUIRE(scenario, out);
  return guarded(
      [&] { *out = leorelay::overlap_area(scenario->value, theta_rad, solver_of(solver)); });
}

lr_status lr_cdf(const lr_scenario* scenario, double theta_rad, lr_convention convention,
                 lr_solver solver, double* out) {
  LR_REQUIRE(scenario, out);
  return guarded([&] {
    *out = leorelay::conditional_contact_cdf(scenario->value, theta_rad, convention_of(convention),
                                             options_of(solver));
  });
}

lr_status lr_pdf(const lr_scenario* scenario, double theta_rad, lr_solver solver, double* density,
                 int* one_sided) {
  LR_REQUIRE(scenario, density, one_sided);
  return guarded([&] {
    const auto v = leorelay::conditional_contact_pdf(scenario->value, theta_rad, options_of(solver));
    *density = v.density;
    *one_sided = v.one_sided ? 1 : 0;
  });
}

lr_status lr_angle_to_distance(const lr_scenario* scenario, double theta_rad, double* out) {
  LR_REQUIRE(scenario, out);
  return guarded(
      [&] { *out = leorelay::angle_to_distance(scenario->value.geometry, theta_rad); });
}

lr_status lr_distance_to_angle(const lr_scenario* scenario, double d_c_km, double* out) {
  LR_REQUIRE(scenario, out);
  return guarded([&] { *out = leorelay::distance_to_angle(scenario->value.geometry, d_c_km); });
}

lr_status lr_distance_domain(const lr_scenario* scenario, double* lower_km, double* upper_km) {
  LR_REQUIRE(scenario, lower_km, upper_km);
  return guarded([&] {
    const auto d = leorelay::contact_distance_domain(scenario->value);
    *lower_km = d.lower_km;
    *upper_km = d.upper_km;
  });
}

lr_status lr_distance_cdf(const lr_scenario* scenario, double d_c_km, lr_solver solver,
                          double* out) {
  LR_REQUIRE(scenario, out);
  return guarded([&] {
    *out = leorelay::conditional_contact_distance_cdf(scenario->value, d_c_km, options_of(solver));
  });
}

lr_status lr_expect_over_distance(const lr_scenario* scenario, lr_function g, void* user,
                                  size_t grid_size, lr_solver solver, double* out) {
  LR_REQUIRE(scenario, out);
  if (g == nullptr) {
    g_last_error = "integrand is NULL";
    return LR_ERR_NULL;
  }
  return guarded([&] {
    *out = leorelay::expect_over_contact_distance(scenario->value, wrap(g, user), grid_size,
                                                  options_of(solver));
  });
}

lr_status lr_single_outage(const lr_scenario* scenario, lr_solver solver, double* probability,
                           int* infeasible) {
  LR_REQUIRE(scenario, probability, infeasible);
  return guarded([&] {
    const auto r = leorelay::single_relay_outage(scenario->value, options_of(solver));
    *probability = r.probability;
    *infeasible = r.infeasible ? 1 : 0;
  });
}

lr_status lr_hop_chord(double distance_km, uint32_t n_hops, double earth_radius_km, double* out) {
  LR_REQUIRE(out);
  return guarded([&] { *out = leorelay::hop_chord_distance(distance_km, n_hops, earth_radius_km); });
}

lr_status lr_multi_outage(const lr_scenario* scenario, uint32_t n_hops, lr_solver solver,
                          double* probability, int* infeasible) {
  LR_REQUIRE(scenario, probability, infeasible);
  return guarded([&] {
    const auto r = leorelay::multi_relay_outage(scenario->value, n_hops, options_of(solver));
    *probability = r.probability;
    *infeasible = r.infeasible ? 1 : 0;
  });
}

lr_status lr_min_hops(const lr_scenario* scenario, double epsilon, uint32_t n_max,
                      lr_solver solver, uint32_t* min_hops, double* sweep) {
  LR_REQUIRE(scenario, min_hops);
  return guarded([&] {
    const auto r =
        leorelay::min_hops_for_outage_target(scenario->value, epsilon, n_max, options_of(solver));
    *min_hops = r.min_hops.value_or(0);
    if (sweep != nullptr)
      for (std::size_t i = 0; i < r.sweep.size(); ++i) sweep[i] = r.sweep[i].probability;
  });
}

lr_status lr_curve_analytic(const lr_scenario* scenario, const double* thetas, size_t count,
                            lr_convention convention, lr_solver solver, lr_curve** out) {
  LR_REQUIRE(scenario, out);
  if (thetas == nullptr && count > 0) {
    g_last_error = "thetas is NULL";
    return LR_ERR_NULL;
  }
  return guarded([&] {
    auto h = std::make_unique<lr_curve>();
    h->value = leorelay::analytic_cdf_curve(scenario->value, std::span<const double>(thetas, count),
                                            convention_of(convention), options_of(solver));
    h->violation = h->value.invariant_violation();
    *out = h.release();
  });
}

lr_status lr_curve_analytic_grid(const lr_scenario* scenario, size_t grid_size,
                                 lr_convention convention, lr_solver solver, lr_curve** out) {
  LR_REQUIRE(scenario, out);
  return guarded([&] {
    auto h = std::make_unique<lr_curve>();
    h->value = leorelay::analytic_cdf_curve(scenario->value, grid_size, convention_of(convention),
                                            options_of(solver));
    h->violation = h->value.invariant_violation();
    *out = h.release();
  });
}

lr_status lr_curve_empirical(const lr_sample* sample, const double* thetas, size_t count,
                             lr_convention convention, lr_curve** out) {
  LR_REQUIRE(sample, out);
  if (thetas == nullptr && count > 0) {
    g_last_error = "thetas is NULL";
    return LR_ERR_NULL;
  }
  return guarded([&] {
    auto h = std::make_unique<lr_curve>();
    h->value = leorelay::empirical_cdf(sample->value, std::span<const double>(thetas, count),
                                       convention_of(convention));
    h->violation = h->value.invariant_violation();
    *out = h.release();
  });
}

void lr_curve_destroy(lr_curve* curve) { delete curve; }

size_t lr_curve_size(const lr_curve* curve) {
  return curve == nullptr ? 0 : curve->value.points.size();
}

lr_status lr_curve_point(const lr_curve* curve, size_t index, double* x, double* p) {
  LR_REQUIRE(curve, x, p);
  return guarded([&] {
    if (index >= curve->value.points.size())
      leorelay::fail(Errc::argument, "index ", index, " out of range (size ",
                     curve->value.points.size(), ")");
    *x = curve->value.points[index].x;
    *p = curve->value.points[index].p;
  });
}

lr_status lr_curve_info(const lr_curve* curve, lr_convention* convention, int* empirical,
                        int* clamped) {
  LR_REQUIRE(curve, convention, empirical, clamped);
  *convention = curve->value.convention == leorelay::CdfConvention::defective ? LR_DEFECTIVE
                                                                              : LR_NORMALIZED;
  *empirical = curve->value.source == leorelay::CurveSource::empirical ? 1 : 0;
  *clamped = curve->value.clamped ? 1 : 0;
  g_last_error.clear();
  return LR_OK;
}

const char* lr_curve_fingerprint(const lr_curve* curve) {
  return curve == nullptr ? "" : curve->value.fingerprint.c_str();
}

const char* lr_curve_violation(const lr_curve* curve) {
  if (curve == nullptr || curve->violation.empty()) return nullptr;
  return curve->violation.c_str();
}

lr_status lr_sample_simulate(const lr_scenario* scenario, const lr_mc_config* mc,
                             lr_sample** out) {
  LR_REQUIRE(scenario, mc, out);
  return guarded([&] {
    auto h = std::make_unique<lr_sample>();
    h->value = leorelay::simulate_contact_angles(scenario->value, mc_of(*mc));
    *out = h.release();
  });
}

void lr_sample_destroy(lr_sample* sample) { delete sample; }

lr_status lr_sample_counts(const lr_sample* sample, uint64_t* trials, uint64_t* outages) {
  LR_REQUIRE(sample, trials, outages);
  *trials = sample->value.trials;
  *outages = sample->value.outages;
  g_last_error.clear();
  return LR_OK;
}

lr_status lr_sample_cdf(const lr_sample* sample, double theta_rad, lr_convention convention,
                        double* p, double* std_error) {
  LR_REQUIRE(sample, p, std_error);
  return guarded([&] {
    const auto conv = convention_of(convention);
    const double value = sample->value.cdf(theta_rad, conv);
    *std_error = sample->value.std_error(theta_rad, conv);
    *p = value;
  });
}

lr_status lr_sample_ks(const lr_sample* sample, const lr_scenario* scenario,
                       lr_convention convention, lr_solver solver, double* out) {
  LR_REQUIRE(sample, scenario, out);
  return guarded([&] {
    const auto conv = convention_of(convention);
    const auto opts = options_of(solver);
    const auto dom = leorelay::contact_angle_domain(scenario->value);
    *out = leorelay::ks_statistic(
        sample->value,
        [&](double t) { return leorelay::conditional_contact_cdf(scenario->value, t, conv, opts); },
        dom.upper_rad, conv);
  });
}

lr_status lr_sample_distance_mean(const lr_sample* sample, const lr_scenario* scenario,
                                  lr_function g, void* user, lr_estimate* out) {
  LR_REQUIRE(sample, scenario, out);
  if (g == nullptr) {
    g_last_error = "integrand is NULL";
    return LR_ERR_NULL;
  }
  return guarded([&] {
    write(leorelay::contact_distance_mean(sample->value, scenario->value.geometry, wrap(g, user)),
          out);
  });
}

lr_status lr_mc_outage(const lr_scenario* scenario, const lr_mc_config* mc, lr_estimate* out) {
  LR_REQUIRE(scenario, mc, out);
  return guarded([&] { write(leorelay::outage_frequency(scenario->value, mc_of(*mc)), out); });
}

lr_status lr_mc_multi_outage(const lr_scenario* scenario, uint32_t n_hops,
                             lr_hop_sampling sampling, const lr_mc_config* mc, lr_estimate* out) {
  LR_REQUIRE(scenario, mc, out);
  return guarded([&] {
    leorelay::HopSampling hs;
    switch (sampling) {
      case LR_HOPS_INDEPENDENT: hs = leorelay::HopSampling::independent; break;
      case LR_HOPS_SHARED: hs = leorelay::HopSampling::shared; break;
      default: leorelay::fail(Errc::argument, "unknown hop sampling ", static_cast<int>(sampling));
    }
    write(leorelay::multi_hop_outage_frequency(scenario->value, n_hops, mc_of(*mc), hs), out);
  });
}

lr_status lr_mc_slice_area(double theta_d_rad, double theta_o_rad, double radius_km,
                           const lr_mc_config* mc, lr_estimate* out) {
  LR_REQUIRE(mc, out);
  return guarded([&] {
    write(leorelay::slice_area_estimate(theta_d_rad, theta_o_rad, radius_km, mc_of(*mc)), out);
  });
}

lr_status lr_mc_overlap_area(const lr_scenario* scenario, double theta_rad,
                             const lr_mc_config* mc, lr_estimate* out) {
  LR_REQUIRE(scenario, mc, out);
  return guarded(
      [&] { write(leorelay::overlap_area_estimate(scenario->value, theta_rad, mc_of(*mc)), out); });
}

}  // extern "C"
