/*
 * Copyright 2026 The leorelay Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS-IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to leorelay: contact-angle statistics and outage of a
 * ground-satellite-ground relay through a uniformly random LEO shell.
 *
 * Every function returns an lr_status. On failure the outputs are left
 * untouched and lr_last_error() describes the problem; the message is
 * thread-local and valid until the next call on the same thread.
 *
 * Angles are radians, lengths kilometres. Dome angles are full cap widths
 * seen from the Earth's centre.
 */

#ifndef LEORELAY_LEORELAY_H_
#define LEORELAY_LEORELAY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LEORELAY_BUILDING_LIBRARY)
#    define LEORELAY_API __declspec(dllexport)
#  else
#    define LEORELAY_API __declspec(dllimport)
#  endif
#else
#  define LEORELAY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lr_status {
  LR_OK = 0,
  LR_ERR_DOMAIN = 1,       /* input outside its mathematical domain */
  LR_ERR_PRECONDITION = 2, /* caps cannot intersect */
  LR_ERR_NUMERICAL = 3,    /* e.g. normalizing a CDF whose mass is zero */
  LR_ERR_DEGENERATE = 4,   /* root not bracketed, empty support */
  LR_ERR_ARGUMENT = 5,     /* bad option value, bad enum, zero trials */
  LR_ERR_INTERNAL = 6,
  LR_ERR_NULL = 7          /* required pointer was NULL */
} lr_status;

typedef enum lr_convention { LR_DEFECTIVE = 0, LR_NORMALIZED = 1 } lr_convention;
typedef enum lr_solver { LR_CLOSED_FORM = 0, LR_ROOT_SOLVE = 1 } lr_solver;

typedef enum lr_split_method {
  LR_SPLIT_CLOSED_FORM = 0,
  LR_SPLIT_ROOT_SOLVE = 1,
  LR_SPLIT_SYMMETRIC_LIMIT = 2,
  LR_SPLIT_CONTAINMENT = 3
} lr_split_method;

typedef enum lr_hop_sampling { LR_HOPS_INDEPENDENT = 0, LR_HOPS_SHARED = 1 } lr_hop_sampling;

typedef struct lr_scenario lr_scenario;
typedef struct lr_curve lr_curve;
typedef struct lr_sample lr_sample;

typedef struct lr_params {
  double earth_radius_km;
  double shell_radius_km;
  double theta_m1_rad;
  double theta_m2_rad;
  double distance_km;
  uint64_t n_sat;
} lr_params;

typedef struct lr_split {
  double theta_o1_rad;
  double theta_o2_rad;
  double raw_o1_rad;
  double raw_o2_rad;
  lr_split_method method;
  int clamped;
} lr_split;

typedef struct lr_mc_config {
  uint64_t trials;
  uint64_t seed;
  uint64_t chunk_size;
  unsigned workers; /* 0: hardware concurrency; never changes results */
} lr_mc_config;

typedef struct lr_estimate {
  double estimate;
  double std_error;
  uint64_t trials;
  uint64_t seed;
} lr_estimate;

typedef double (*lr_function)(double x, void* user);

LEORELAY_API const char* lr_version(void);
LEORELAY_API const char* lr_last_error(void);
LEORELAY_API const char* lr_status_name(lr_status status);

/* Defaults: R_E 6371, shell 6921, dome angles pi/4, d 3000, N 3000. */
LEORELAY_API void lr_params_default(lr_params* out);
LEORELAY_API void lr_mc_config_default(lr_mc_config* out);

LEORELAY_API lr_status lr_scenario_create(const lr_params* params, lr_scenario** out);
LEORELAY_API void lr_scenario_destroy(lr_scenario* scenario);
LEORELAY_API lr_status lr_scenario_get(const lr_scenario* scenario, lr_params* out);
LEORELAY_API lr_status lr_scenario_set_distance(lr_scenario* scenario, double distance_km);
LEORELAY_API lr_status lr_scenario_set_n_sat(lr_scenario* scenario, uint64_t n_sat);
/* The string is owned by the scenario and valid until it is modified or destroyed. */
LEORELAY_API lr_status lr_scenario_fingerprint(const lr_scenario* scenario, const char** out);

/* Geometry. */
LEORELAY_API lr_status lr_ground_central_angle(const lr_scenario* scenario, double* out);
LEORELAY_API lr_status lr_feasibility(const lr_scenario* scenario, int* intersects,
                                      int* los_valid, double* margin_rad);
LEORELAY_API lr_status lr_max_dome_angle(double earth_radius_km, double shell_radius_km,
                                         double elevation_rad, double* out);
LEORELAY_API lr_status lr_slice_area(double theta_d_rad, double theta_o_rad, double radius_km,
                                     double* out);
LEORELAY_API lr_status lr_slice_area_check(double theta_d_rad, double theta_o_rad,
                                           double radius_km, double* standard, double* refined,
                                           double* relative_change);
LEORELAY_API lr_status lr_overlap_split(double theta_d1_rad, double theta_d2_rad, double c_rad,
                                        lr_solver solver, lr_split* out);

/* Distribution. */
LEORELAY_API lr_status lr_contact_domain(const lr_scenario* scenario, double* lower_rad,
                                         double* upper_rad);
LEORELAY_API lr_status lr_overlap_area(const lr_scenario* scenario, double theta_rad,
                                       lr_solver solver, double* out);
LEORELAY_API lr_status lr_cdf(const lr_scenario* scenario, double theta_rad,
                              lr_convention convention, lr_solver solver, double* out);
LEORELAY_API lr_status lr_pdf(const lr_scenario* scenario, double theta_rad, lr_solver solver,
                              double* density, int* one_sided);
LEORELAY_API lr_status lr_angle_to_distance(const lr_scenario* scenario, double theta_rad,
                                            double* out);
LEORELAY_API lr_status lr_distance_to_angle(const lr_scenario* scenario, double d_c_km,
                                            double* out);
LEORELAY_API lr_status lr_distance_domain(const lr_scenario* scenario, double* lower_km,
                                          double* upper_km);
LEORELAY_API lr_status lr_distance_cdf(const lr_scenario* scenario, double d_c_km,
                                       lr_solver solver, double* out);
LEORELAY_API lr_status lr_expect_over_distance(const lr_scenario* scenario, lr_function g,
                                               void* user, size_t grid_size, lr_solver solver,
                                               double* out);

/* Outage. */
LEORELAY_API lr_status lr_single_outage(const lr_scenario* scenario, lr_solver solver,
                                        double* probability, int* infeasible);
LEORELAY_API lr_status lr_hop_chord(double distance_km, uint32_t n_hops, double earth_radius_km,
                                    double* out);
LEORELAY_API lr_status lr_multi_outage(const lr_scenario* scenario, uint32_t n_hops,
                                       lr_solver solver, double* probability, int* infeasible);
/* *min_hops is 0 when no n <= n_max meets the target. `sweep` may be NULL;
 * otherwise it receives n_max outage probabilities for n = 1..n_max. */
LEORELAY_API lr_status lr_min_hops(const lr_scenario* scenario, double epsilon, uint32_t n_max,
                                   lr_solver solver, uint32_t* min_hops, double* sweep);

/* Curves. */
LEORELAY_API lr_status lr_curve_analytic(const lr_scenario* scenario, const double* thetas,
                                         size_t count, lr_convention convention,
                                         lr_solver solver, lr_curve** out);
LEORELAY_API lr_status lr_curve_analytic_grid(const lr_scenario* scenario, size_t grid_size,
                                              lr_convention convention, lr_solver solver,
                                              lr_curve** out);
LEORELAY_API lr_status lr_curve_empirical(const lr_sample* sample, const double* thetas,
                                          size_t count, lr_convention convention,
                                          lr_curve** out);
LEORELAY_API void lr_curve_destroy(lr_curve* curve);
LEORELAY_API size_t lr_curve_size(const lr_curve* curve);
LEORELAY_API lr_status lr_curve_point(const lr_curve* curve, size_t index, double* x, double* p);
LEORELAY_API lr_status lr_curve_info(const lr_curve* curve, lr_convention* convention,
                                     int* empirical, int* clamped);
LEORELAY_API const char* lr_curve_fingerprint(const lr_curve* curve);
/* NULL when the invariants hold, else a description owned by the curve. */
LEORELAY_API const char* lr_curve_violation(const lr_curve* curve);

/* Monte Carlo. */
LEORELAY_API lr_status lr_sample_simulate(const lr_scenario* scenario, const lr_mc_config* mc,
                                          lr_sample** out);
LEORELAY_API void lr_sample_destroy(lr_sample* sample);
LEORELAY_API lr_status lr_sample_counts(const lr_sample* sample, uint64_t* trials,
                                        uint64_t* outages);
LEORELAY_API lr_status lr_sample_cdf(const lr_sample* sample, double theta_rad,
                                     lr_convention convention, double* p, double* std_error);
/* Kolmogorov distance between the sample and the analytic CDF of `scenario`. */
LEORELAY_API lr_status lr_sample_ks(const lr_sample* sample, const lr_scenario* scenario,
                                    lr_convention convention, lr_solver solver, double* out);
LEORELAY_API lr_status lr_sample_distance_mean(const lr_sample* sample,
                                               const lr_scenario* scenario, lr_function g,
                                               void* user, lr_estimate* out);
LEORELAY_API lr_status lr_mc_outage(const lr_scenario* scenario, const lr_mc_config* mc,
                                    lr_estimate* out);
LEORELAY_API lr_status lr_mc_multi_outage(const lr_scenario* scenario, uint32_t n_hops,
                                          lr_hop_sampling sampling, const lr_mc_config* mc,
                                          lr_estimate* out);
LEORELAY_API lr_status lr_mc_slice_area(double theta_d_rad, double theta_o_rad, double radius_km,
                                        const lr_mc_config* mc, lr_estimate* out);
LEORELAY_API lr_status lr_mc_overlap_area(const lr_scenario* scenario, double theta_rad,
                                          const lr_mc_config* mc, lr_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* LEORELAY_LEORELAY_H_ */
