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
#include <limits>

#include "errors.hpp"
#include "geometry.hpp"
#include "oracles.hpp"
#include "scenario.hpp"

using namespace leorelay;

namespace {

// Frozen from a 40-digit mpmath evaluation of the same formulas.
constexpr double kC3000 = 0.4753463383837966725600324843627844739659;
constexpr double kSlicePi4Pi8 = 11232581.77823245570712816650107446346912;
constexpr double kSlicePi4Pi16 = 4608111.487851546435552885083239569080127;
constexpr double kSlicePi4Pi4 = 22465163.55646491141425633300214892693823;
constexpr double kCapPi4 = 22909679.50418440017258690096276686083908;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("central angle from chord") {
  CHECK(central_angle_from_chord(0, 6371) == 0.0);
  CHECK(central_angle_from_chord(2 * 6371, 6371) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(central_angle_from_chord(3000, 6371) == doctest::Approx(kC3000).epsilon(1e-15));
  CHECK(code_of([] { central_angle_from_chord(-1, 6371); }) == Errc::domain);
  CHECK(code_of([] { central_angle_from_chord(12743, 6371); }) == Errc::domain);
}

TEST_CASE("chord from central angle") {
  CHECK(chord_from_central_angle(0, 6371) == 0.0);
  CHECK(chord_from_central_angle(kPi, 6371) == doctest::Approx(12742).epsilon(1e-15));
  CHECK(chord_from_central_angle(kC3000, 6371) == doctest::Approx(3000).epsilon(1e-14));
  CHECK(code_of([] { chord_from_central_angle(-0.1, 6371); }) == Errc::domain);
  CHECK(code_of([] { chord_from_central_angle(3.2, 6371); }) == Errc::domain);
}

TEST_CASE("chord round trip to 1e-12 relative") {
  for (int i = 1; i <= 400; ++i) {
    const double angle = kPi * i / 400.0;
    const double back = central_angle_from_chord(chord_from_central_angle(angle, 6371), 6371);
    CHECK(std::abs(back - angle) <= 1e-12 * angle);
  }
}

TEST_CASE("cap full area") {
  CHECK(cap_full_area(SphericalCap(1e-8), 6921) < 1e-6);
  const double hemi = cap_full_area(SphericalCap(std::nextafter(kPi, 0.0)), 6921);
  CHECK(hemi == doctest::Approx(2 * kPi * 6921.0 * 6921.0).epsilon(1e-12));
  CHECK(cap_full_area(SphericalCap(kPi / 4), 6921) == doctest::Approx(kCapPi4).epsilon(1e-14));
  CHECK(code_of([] { SphericalCap{0.0}; }) == Errc::domain);
  CHECK(code_of([] { SphericalCap{kPi}; }) == Errc::domain);
}

TEST_CASE("slice area frozen values") {
  CHECK(cap_slice_area(kPi / 4, kPi / 8, 6921) == doctest::Approx(kSlicePi4Pi8).epsilon(1e-12));
  CHECK(cap_slice_area(kPi / 4, kPi / 16, 6921) == doctest::Approx(kSlicePi4Pi16).epsilon(1e-12));
  CHECK(cap_slice_area(kPi / 4, kPi / 4, 6921) == doctest::Approx(kSlicePi4Pi4).epsilon(1e-12));
}

TEST_CASE("slice area is zero at theta_o = 0 and below the full cap") {
  for (double td : {0.01, 0.3, kPi / 4, 1.5, 3.0}) {
    CHECK(cap_slice_area(td, 0.0, 6921) == 0.0);
    CHECK(cap_slice_area(td, td, 6921) < cap_full_area(SphericalCap(td), 6921));
  }
}

TEST_CASE("slice area strictly increasing in theta_o") {
  for (double td : {0.1, kPi / 4, 2.0}) {
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double s = cap_slice_area(td, td * i / 200.0, 6921);
      CHECK(s > prev);
      prev = s;
    }
  }
  CHECK(cap_slice_area(kPi / 4, kPi / 16, 6921) < cap_slice_area(kPi / 4, kPi / 8, 6921));
  CHECK(cap_slice_area(kPi / 4, kPi / 8, 6921) < cap_slice_area(kPi / 4, kPi / 4, 6921));
}

TEST_CASE("slice area rejects theta_o outside [0, theta_d]") {
  CHECK(code_of([] { cap_slice_area(kPi / 4, -1e-3, 6921); }) == Errc::domain);
  CHECK(code_of([] { cap_slice_area(kPi / 4, kPi / 4 + 1e-3, 6921); }) == Errc::domain);
  CHECK(code_of([] { cap_slice_area(kPi, 0.1, 6921); }) == Errc::domain);
}

TEST_CASE("quadrature node doubling changes slice area by < 1e-8") {
  for (double td : {0.05, 0.5, kPi / 4, 1.5, 2.5, 3.0}) {
    for (int i = 1; i <= 20; ++i) {
      const auto q = cap_slice_area_self_check(td, td * i / 20.0, 6921);
      CHECK(q.relative_change < 1e-8);
    }
  }
}

TEST_CASE("self-check flags the near-hemisphere full slice") {
  // The integrand approaches asin(1) at one end; node doubling exposes it.
  const auto q = cap_slice_area_self_check(3.1, 3.1, 6921);
  CHECK(q.relative_change > 1e-8);
  CHECK(q.relative_change < 1e-4);
}

TEST_CASE("slice area approaches the exact surface area for small caps") {
  // The projected-arc formula is exact only asymptotically.
  const double small = cap_slice_area(0.02, 0.01, 6921);
  CHECK(small == doctest::Approx(oracle::slice_area(0.02, 0.01, 6921)).epsilon(1e-4));
  const double half = cap_slice_area(kPi / 4, kPi / 8, 6921);
  const double exact = oracle::slice_area(kPi / 4, kPi / 8, 6921);
  CHECK(exact == doctest::Approx(oracle::cap_area(kPi / 8, 6921) / 2).epsilon(1e-12));
  CHECK(std::abs(half / exact - 1.0) <= 0.02);
}

TEST_CASE("closed-form split: symmetric and coincident limits") {
  const double c = 0.3;
  auto s = overlap_split_closed_form(kPi / 4, kPi / 4, c);
  CHECK(s.method == SplitMethod::symmetric_limit);
  CHECK(s.theta_o1_rad == doctest::Approx((kPi / 4 - c) / 2).epsilon(1e-15));
  CHECK(s.theta_o2_rad == doctest::Approx((kPi / 4 - c) / 2).epsilon(1e-15));

  s = overlap_split_closed_form(kPi / 4, kPi / 4, 0.0);
  CHECK(s.theta_o1_rad == doctest::Approx(kPi / 8).epsilon(1e-15));
  CHECK(s.theta_o2_rad == doctest::Approx(kPi / 8).epsilon(1e-15));
}

TEST_CASE("closed-form split frozen value") {
  const auto s = overlap_split_closed_form(0.6, kPi / 4, kC3000);
  CHECK(s.method == SplitMethod::closed_form);
  CHECK_FALSE(s.clamped);
  CHECK(s.theta_o1_rad == doctest::Approx(0.1306037620994614083721414833598823908027).epsilon(1e-13));
  CHECK(s.theta_o2_rad == doctest::Approx(0.0867489812154660738756564551872709957561).epsilon(1e-13));
}

TEST_CASE("root-solve split: symmetric, coincident, residual") {
  auto s = overlap_split_root_solve(kPi / 4, kPi / 4, 0.3);
  CHECK(s.theta_o1_rad == (kPi / 4 - 0.3) / 2);
  CHECK(split_ratio_residual(kPi / 4, kPi / 4, s) == 0.0);
  s = overlap_split_root_solve(kPi / 4, kPi / 4, 0.0);
  CHECK(s.theta_o1_rad == doctest::Approx(kPi / 8).epsilon(1e-15));

  s = overlap_split_root_solve(0.6, kPi / 4, kC3000);
  CHECK(std::abs(split_ratio_residual(0.6, kPi / 4, s)) <= 1e-10);
  const auto cf = overlap_split_closed_form(0.6, kPi / 4, kC3000);
  CHECK(std::abs(s.theta_o1_rad - cf.theta_o1_rad) <= 5e-3);
}

TEST_CASE("both solvers satisfy the sum constraint") {
  for (double td1 = 0.05; td1 < 3.0; td1 += 0.07) {
    for (double td2 : {0.3, kPi / 4, 1.2, 2.0}) {
      for (double c : {0.0, 0.1, kC3000, 0.9}) {
        const double s = td1 / 2 + td2 / 2 - c;
        if (!(s > 0.0)) continue;
        const auto cf = overlap_split_closed_form(td1, td2, c);
        CHECK(std::abs(cf.theta_o1_rad + cf.theta_o2_rad - s) <= 1e-10);
        CHECK(cf.theta_o1_rad >= 0.0);
        CHECK(cf.theta_o2_rad >= 0.0);
        CHECK(cf.theta_o1_rad <= td1);
        CHECK(cf.theta_o2_rad <= td2);
        try {
          const auto rs = overlap_split_root_solve(td1, td2, c);
          CHECK(std::abs(rs.theta_o1_rad + rs.theta_o2_rad - s) <= 1e-10);
        } catch (const Error& e) {
          CHECK(e.code() == Errc::degenerate);  // nested caps have no bracketed root
        }
      }
    }
  }
}

TEST_CASE("splits vanish together at tangency") {
  const double td1 = 0.6, td2 = kPi / 4;
  const double c = td1 / 2 + td2 / 2 - 1e-9;
  const auto cf = overlap_split_closed_form(td1, td2, c);
  const auto rs = overlap_split_root_solve(td1, td2, c);
  CHECK(cf.theta_o1_rad + cf.theta_o2_rad <= 1e-9 + 1e-15);
  CHECK(std::abs(cf.theta_o1_rad - rs.theta_o1_rad) <= 1e-9);
}

TEST_CASE("splits reject disjoint caps") {
  CHECK(code_of([] { overlap_split_closed_form(0.2, 0.2, 0.5); }) == Errc::precondition);
  CHECK(code_of([] { overlap_split_root_solve(0.2, 0.2, 0.5); }) == Errc::precondition);
  CHECK(code_of([] { resolve_overlap_split(0.2, 0.2, 0.2, SplitSolver::closed_form); }) ==
        Errc::precondition);
}

TEST_CASE("containment takes the inner cap whole") {
  const auto s = resolve_overlap_split(0.2, kPi / 4, 0.05, SplitSolver::closed_form);
  CHECK(s.method == SplitMethod::containment);
  CHECK(s.theta_o1_rad == 0.2);
  CHECK(s.theta_o2_rad == 0.0);
  CHECK(code_of([] { overlap_split_root_solve(0.2, kPi / 4, 0.05); }) == Errc::degenerate);
}

TEST_CASE("feasibility") {
  RelayScenario s;
  auto f = feasibility_check(s);
  CHECK(f.intersects);
  CHECK(f.margin_rad == doctest::Approx(kPi / 2 - 2 * kC3000).epsilon(1e-14));
  CHECK_FALSE(f.los_valid);

  s.distance_km = 0;
  CHECK(feasibility_check(s).intersects);

  s.distance_km = 3000;
  s.theta_m1_rad = s.theta_m2_rad = 0.2;
  f = feasibility_check(s);
  CHECK_FALSE(f.intersects);
  CHECK(f.los_valid);
}

TEST_CASE("dome angle from elevation") {
  const auto g550 = GeometryConfig::from_altitude(550);
  const auto g1200 = GeometryConfig::from_altitude(1200);
  CHECK(max_dome_angle_from_elevation(g550, 0) ==
        doctest::Approx(2 * std::acos(6371.0 / 6921.0)).epsilon(1e-15));
  CHECK(max_dome_angle_from_elevation(g1200, 0) > max_dome_angle_from_elevation(g550, 0));
  CHECK(max_dome_angle_from_elevation(g550, 0.4) < max_dome_angle_from_elevation(g550, 0.1));
  CHECK(code_of([&] { max_dome_angle_from_elevation(g550, kPi / 2); }) == Errc::domain);
}

TEST_CASE("geometry config validation") {
  CHECK(code_of([] { GeometryConfig::from_altitude(-1); }) == Errc::domain);
  CHECK(code_of([] { GeometryConfig{6371, 6000}.validate(); }) == Errc::domain);
  CHECK(GeometryConfig::from_altitude(550).shell_radius_km == 6921);
}

TEST_CASE("lens oracle agrees with direct quadrature") {
  const double cases[][3] = {{0.1, 0.3927, 0.4753}, {0.3, 0.3927, 0.4753}, {0.39, 0.3927, 0.1},
                             {kPi / 8, kPi / 2, 1.4}, {1.2, 1.0, 0.5}};
  for (const auto& c : cases)
    CHECK(oracle::lens_area(c[0], c[1], c[2], 1.0) ==
          doctest::Approx(oracle::lens_area_quadrature(c[0], c[1], c[2], 1.0)).epsilon(1e-10));
}
