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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <leorelay/leorelay.h>

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Scenario {
  lr_scenario* h = nullptr;
  explicit Scenario(const lr_params& p) { REQUIRE(lr_scenario_create(&p, &h) == LR_OK); }
  Scenario() {
    lr_params p;
    lr_params_default(&p);
    REQUIRE(lr_scenario_create(&p, &h) == LR_OK);
  }
  ~Scenario() { lr_scenario_destroy(h); }
};

double identity(double, void*) { return 1.0; }
double scaled(double x, void* user) { return x * *static_cast<double*>(user); }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(lr_status_name(LR_OK)) == "ok");
  CHECK(std::string(lr_status_name(LR_ERR_PRECONDITION)) == "precondition");
  CHECK(std::string(lr_status_name(LR_ERR_NULL)) == "null");
  CHECK(std::string(lr_status_name(static_cast<lr_status>(99))) == "unknown");
  CHECK(std::strlen(lr_version()) > 0);
}

TEST_CASE("defaults") {
  lr_params p;
  lr_params_default(&p);
  CHECK(p.earth_radius_km == 6371.0);
  CHECK(p.shell_radius_km == 6921.0);
  CHECK(p.theta_m1_rad == doctest::Approx(kPi / 4));
  CHECK(p.distance_km == 3000.0);
  CHECK(p.n_sat == 3000);
  lr_mc_config mc;
  lr_mc_config_default(&mc);
  CHECK(mc.trials > 0);
  CHECK(mc.chunk_size > 0);
}

TEST_CASE("null pointers are rejected") {
  lr_scenario* s = nullptr;
  CHECK(lr_scenario_create(nullptr, &s) == LR_ERR_NULL);
  CHECK(s == nullptr);
  double x = 0;
  CHECK(lr_cdf(nullptr, 0.1, LR_DEFECTIVE, LR_CLOSED_FORM, &x) == LR_ERR_NULL);
  Scenario sc;
  CHECK(lr_cdf(sc.h, 0.1, LR_DEFECTIVE, LR_CLOSED_FORM, nullptr) == LR_ERR_NULL);
  CHECK(lr_mc_outage(sc.h, nullptr, nullptr) == LR_ERR_NULL);
  CHECK(std::strlen(lr_last_error()) > 0);
  lr_scenario_destroy(nullptr);
  lr_curve_destroy(nullptr);
  lr_sample_destroy(nullptr);
}

TEST_CASE("errors map to status codes and leave outputs untouched") {
  lr_params p;
  lr_params_default(&p);
  p.n_sat = 0;
  lr_scenario* bad = nullptr;
  CHECK(lr_scenario_create(&p, &bad) != LR_OK);
  CHECK(bad == nullptr);

  Scenario sc;
  double out = -7.0;
  CHECK(lr_hop_chord(3000, 0, 6371, &out) == LR_ERR_ARGUMENT);
  CHECK(out == -7.0);
  CHECK(std::string(lr_last_error()).find("n_hops") != std::string::npos);
  CHECK(lr_cdf(sc.h, 0.1, static_cast<lr_convention>(5), LR_CLOSED_FORM, &out) == LR_ERR_ARGUMENT);
  CHECK(lr_angle_to_distance(sc.h, -1.0, &out) == LR_ERR_DOMAIN);
  CHECK(lr_slice_area(kPi / 4, 1.0, 6921, &out) == LR_ERR_DOMAIN);

  lr_params q;
  lr_params_default(&q);
  q.theta_m1_rad = q.theta_m2_rad = 0.2;
  Scenario apart(q);
  double lo = 0, hi = 0;
  CHECK(lr_contact_domain(apart.h, &lo, &hi) == LR_ERR_PRECONDITION);
  lr_split split;
  CHECK(lr_overlap_split(0.2, 0.2, 0.5, LR_CLOSED_FORM, &split) == LR_ERR_PRECONDITION);

  uint32_t hops = 1;
  CHECK(lr_min_hops(sc.h, 1.0, 8, LR_CLOSED_FORM, &hops, nullptr) == LR_ERR_ARGUMENT);
  lr_mc_config mc;
  lr_mc_config_default(&mc);
  mc.trials = 0;
  lr_estimate est;
  CHECK(lr_mc_outage(sc.h, &mc, &est) == LR_ERR_ARGUMENT);
}

TEST_CASE("scenario lifecycle") {
  Scenario sc;
  const char* fp = nullptr;
  REQUIRE(lr_scenario_fingerprint(sc.h, &fp) == LR_OK);
  const std::string before = fp;
  CHECK(lr_scenario_set_distance(sc.h, 1000) == LR_OK);
  CHECK(lr_scenario_set_n_sat(sc.h, 10) == LR_OK);
  REQUIRE(lr_scenario_fingerprint(sc.h, &fp) == LR_OK);
  CHECK(std::string(fp) != before);
  lr_params p;
  REQUIRE(lr_scenario_get(sc.h, &p) == LR_OK);
  CHECK(p.distance_km == 1000.0);
  CHECK(p.n_sat == 10);
  CHECK(lr_scenario_set_distance(sc.h, -1) != LR_OK);
  CHECK(lr_scenario_set_n_sat(sc.h, 0) != LR_OK);
  REQUIRE(lr_scenario_get(sc.h, &p) == LR_OK);
  CHECK(p.distance_km == 1000.0);
  CHECK(p.n_sat == 10);
}

TEST_CASE("analytic values through the C interface") {
  Scenario sc;
  double c = 0;
  REQUIRE(lr_ground_central_angle(sc.h, &c) == LR_OK);
  CHECK(c == doctest::Approx(0.47534633838379667).epsilon(1e-15));
  double lo = 0, hi = 0;
  REQUIRE(lr_contact_domain(sc.h, &lo, &hi) == LR_OK);
  CHECK(lo == doctest::Approx(0.08264725668507252).epsilon(1e-14));
  CHECK(hi == doctest::Approx(kPi / 8).epsilon(1e-15));
  double f = 0;
  REQUIRE(lr_cdf(sc.h, 0.1, LR_DEFECTIVE, LR_CLOSED_FORM, &f) == LR_OK);
  CHECK(f == doctest::Approx(0.2632220606016006).epsilon(1e-10));
  double dens = 0;
  int one_sided = 1;
  REQUIRE(lr_pdf(sc.h, 0.12, LR_CLOSED_FORM, &dens, &one_sided) == LR_OK);
  CHECK(dens > 0.0);
  CHECK(one_sided == 0);
  double dc = 0, back = 0;
  REQUIRE(lr_angle_to_distance(sc.h, 0.3927, &dc) == LR_OK);
  CHECK(dc == doctest::Approx(2648.659233494153).epsilon(1e-13));
  REQUIRE(lr_distance_to_angle(sc.h, dc, &back) == LR_OK);
  CHECK(back == doctest::Approx(0.3927).epsilon(1e-12));
  double mass = 0, fhi = 0;
  REQUIRE(lr_expect_over_distance(sc.h, identity, nullptr, 101, LR_CLOSED_FORM, &mass) == LR_OK);
  REQUIRE(lr_cdf(sc.h, hi, LR_DEFECTIVE, LR_CLOSED_FORM, &fhi) == LR_OK);
  CHECK(mass == doctest::Approx(fhi).epsilon(1e-13));
  double two = 2.0, m1 = 0, m2 = 0;
  REQUIRE(lr_expect_over_distance(sc.h, scaled, &two, 101, LR_CLOSED_FORM, &m2) == LR_OK);
  two = 1.0;
  REQUIRE(lr_expect_over_distance(sc.h, scaled, &two, 101, LR_CLOSED_FORM, &m1) == LR_OK);
  CHECK(m2 == doctest::Approx(2 * m1).epsilon(1e-14));
  double area = 0;
  REQUIRE(lr_slice_area(kPi / 4, kPi / 8, 6921, &area) == LR_OK);
  CHECK(area == doctest::Approx(11232581.778232456).epsilon(1e-12));
  lr_split split;
  REQUIRE(lr_overlap_split(0.6, kPi / 4, c, LR_CLOSED_FORM, &split) == LR_OK);
  CHECK(split.theta_o1_rad == doctest::Approx(0.13060376209946141).epsilon(1e-12));
  CHECK(split.method == LR_SPLIT_CLOSED_FORM);
}

TEST_CASE("outage through the C interface") {
  Scenario sc;
  REQUIRE(lr_scenario_set_n_sat(sc.h, 1) == LR_OK);
  double p = 0;
  int infeasible = 1;
  REQUIRE(lr_single_outage(sc.h, LR_CLOSED_FORM, &p, &infeasible) == LR_OK);
  CHECK(p == doctest::Approx(0.98888929377112604).epsilon(1e-12));
  CHECK(infeasible == 0);
  REQUIRE(lr_scenario_set_n_sat(sc.h, 3000) == LR_OK);
  REQUIRE(lr_scenario_set_distance(sc.h, 8000) == LR_OK);
  REQUIRE(lr_single_outage(sc.h, LR_CLOSED_FORM, &p, &infeasible) == LR_OK);
  CHECK(p == 1.0);
  CHECK(infeasible == 1);
  std::vector<double> sweep(16);
  uint32_t hops = 0;
  REQUIRE(lr_min_hops(sc.h, 1e-3, 16, LR_CLOSED_FORM, &hops, sweep.data()) == LR_OK);
  CHECK(hops == 3);
  CHECK(sweep[0] == 1.0);
  REQUIRE(lr_min_hops(sc.h, 1e-3, 2, LR_CLOSED_FORM, &hops, nullptr) == LR_OK);
  CHECK(hops == 0);
  double chord = 0;
  REQUIRE(lr_hop_chord(3000, 3, 6371, &chord) == LR_OK);
  CHECK(chord == doctest::Approx(1008.4215073890033).epsilon(1e-14));
}

TEST_CASE("curves") {
  Scenario sc;
  lr_curve* curve = nullptr;
  REQUIRE(lr_curve_analytic_grid(sc.h, 21, LR_NORMALIZED, LR_CLOSED_FORM, &curve) == LR_OK);
  CHECK(lr_curve_size(curve) == 21);
  double x = 0, p = 0;
  REQUIRE(lr_curve_point(curve, 20, &x, &p) == LR_OK);
  CHECK(p == 1.0);
  CHECK(lr_curve_point(curve, 21, &x, &p) == LR_ERR_ARGUMENT);
  CHECK(lr_curve_violation(curve) == nullptr);
  lr_convention conv = LR_DEFECTIVE;
  int empirical = 1, clamped = 1;
  REQUIRE(lr_curve_info(curve, &conv, &empirical, &clamped) == LR_OK);
  CHECK(conv == LR_NORMALIZED);
  CHECK(empirical == 0);
  CHECK(clamped == 0);
  const char* fp = nullptr;
  REQUIRE(lr_scenario_fingerprint(sc.h, &fp) == LR_OK);
  CHECK(std::string(lr_curve_fingerprint(curve)) == fp);
  lr_curve_destroy(curve);

  const double thetas[] = {0.0, 0.1, 0.5};
  REQUIRE(lr_curve_analytic(sc.h, thetas, 3, LR_DEFECTIVE, LR_CLOSED_FORM, &curve) == LR_OK);
  REQUIRE(lr_curve_info(curve, &conv, &empirical, &clamped) == LR_OK);
  CHECK(clamped == 1);
  lr_curve_destroy(curve);
  CHECK(lr_curve_analytic_grid(sc.h, 1, LR_DEFECTIVE, LR_CLOSED_FORM, &curve) == LR_ERR_ARGUMENT);
}

TEST_CASE("monte carlo through the C interface") {
  Scenario sc;
  lr_mc_config mc;
  lr_mc_config_default(&mc);
  mc.trials = 20000;
  lr_sample* sample = nullptr;
  REQUIRE(lr_sample_simulate(sc.h, &mc, &sample) == LR_OK);
  uint64_t trials = 0, outages = 99;
  REQUIRE(lr_sample_counts(sample, &trials, &outages) == LR_OK);
  CHECK(trials == 20000);
  CHECK(outages == 0);
  double p = 0, se = 0;
  REQUIRE(lr_sample_cdf(sample, 0.12, LR_DEFECTIVE, &p, &se) == LR_OK);
  CHECK(p > 0.0);
  CHECK(se > 0.0);
  double ks = 1;
  REQUIRE(lr_sample_ks(sample, sc.h, LR_DEFECTIVE, LR_CLOSED_FORM, &ks) == LR_OK);
  CHECK(ks < 0.04);
  lr_estimate mean;
  REQUIRE(lr_sample_distance_mean(sample, sc.h, identity, nullptr, &mean) == LR_OK);
  CHECK(mean.estimate == 1.0);
  const double thetas[] = {0.1, 0.2};
  lr_curve* curve = nullptr;
  REQUIRE(lr_curve_empirical(sample, thetas, 2, LR_DEFECTIVE, &curve) == LR_OK);
  int empirical = 0;
  lr_convention conv;
  int clamped;
  REQUIRE(lr_curve_info(curve, &conv, &empirical, &clamped) == LR_OK);
  CHECK(empirical == 1);
  lr_curve_destroy(curve);
  lr_sample_destroy(sample);

  lr_estimate est;
  mc.trials = 10000;
  REQUIRE(lr_mc_outage(sc.h, &mc, &est) == LR_OK);
  CHECK(est.estimate == 0.0);
  CHECK(est.trials == 10000);
  REQUIRE(lr_mc_multi_outage(sc.h, 2, LR_HOPS_INDEPENDENT, &mc, &est) == LR_OK);
  CHECK(lr_mc_multi_outage(sc.h, 2, static_cast<lr_hop_sampling>(7), &mc, &est) ==
        LR_ERR_ARGUMENT);
  REQUIRE(lr_mc_slice_area(kPi / 4, kPi / 4, 6921, &mc, &est) == LR_OK);
  CHECK(std::abs(est.estimate - 22465163.556464911) < 5 * est.std_error);
  REQUIRE(lr_mc_overlap_area(sc.h, 0.0, &mc, &est) == LR_OK);
  CHECK(est.estimate == 0.0);
}
