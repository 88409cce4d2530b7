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

#include "distribution.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "outage.hpp"

using namespace leorelay;

namespace {

RelayScenario reference(std::uint64_t n = 3000, double d = 3000) {
  RelayScenario s;
  s.geometry = GeometryConfig::from_altitude(550);
  s.n_sat = n;
  s.distance_km = d;
  return s;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("single relay outage frozen values") {
  // 40-digit evaluation of the same formula, independent implementation.
  CHECK(single_relay_outage(reference(1)).probability ==
        doctest::Approx(0.98888929377112604).epsilon(1e-12));
  CHECK(single_relay_outage(reference(100)).probability ==
        doctest::Approx(0.32716550105910499).epsilon(1e-10));
  CHECK(single_relay_outage(reference(10, 1000)).probability ==
        doctest::Approx(0.75054024743145817).epsilon(1e-10));
  // Far below 1e-16: computed as (1 - p)^N, not 1 - F.
  CHECK(single_relay_outage(reference()).probability ==
        doctest::Approx(2.7734801257185340e-15).epsilon(1e-8));
}

TEST_CASE("single relay outage is 1 - F(upper)") {
  for (std::uint64_t n : {1ull, 7ull, 100ull, 1000ull}) {
    const auto s = reference(n);
    const auto dom = contact_angle_domain(s);
    CHECK(single_relay_outage(s).probability ==
          doctest::Approx(1.0 - conditional_contact_cdf(s, dom.upper_rad)).epsilon(1e-12));
  }
}

TEST_CASE("infeasible scenarios have certain outage") {
  const auto r = single_relay_outage(reference(3000, 6000));
  CHECK(r.infeasible);
  CHECK(r.probability == 1.0);
  auto s = reference();
  s.theta_m1_rad = s.theta_m2_rad = 0.2;
  CHECK(single_relay_outage(s).infeasible);
  CHECK(multi_relay_outage(reference(3000, 8000), 1).probability == 1.0);
}

TEST_CASE("outage is nonincreasing in N and nondecreasing in d") {
  double prev = 2.0;
  for (std::uint64_t n = 1; n <= 4096; n *= 2) {
    const double p = single_relay_outage(reference(n)).probability;
    CHECK(p <= prev);
    prev = p;
  }
  prev = -1.0;
  for (double d = 0; d <= 7000; d += 100) {
    const double p = single_relay_outage(reference(300, d)).probability;
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("log outage is linear in N") {
  const auto base = single_relay_outage(reference(1)).probability;
  for (std::uint64_t n : {2ull, 10ull, 250ull, 3000ull}) {
    const double p = single_relay_outage(reference(n)).probability;
    CHECK(std::log(p) == doctest::Approx(n * std::log(base)).epsilon(1e-12));
  }
}

TEST_CASE("hop chord") {
  CHECK(hop_chord_distance(3000, 3, 6371) == doctest::Approx(1008.4215073890033).epsilon(1e-14));
  CHECK(hop_chord_distance(3000, 1, 6371) == 3000.0);
  CHECK(hop_chord_distance(0, 5, 6371) == 0.0);
  for (std::uint32_t n = 1; n < 20; ++n)
    CHECK(hop_chord_distance(8000, n + 1, 6371) < hop_chord_distance(8000, n, 6371));
  CHECK(code_of([] { hop_chord_distance(3000, 0, 6371); }) == Errc::argument);
  CHECK(code_of([] { hop_chord_distance(13000, 2, 6371); }) == Errc::domain);
}

TEST_CASE("one hop is bit-identical to the single relay") {
  for (double d : {0.0, 500.0, 3000.0, 4000.0, 6000.0}) {
    const auto s = reference(500, d);
    CHECK(multi_relay_outage(s, 1).probability == single_relay_outage(s).probability);
    CHECK(multi_relay_outage(s, 1).infeasible == single_relay_outage(s).infeasible);
  }
}

TEST_CASE("multi-hop frozen values") {
  const auto s = reference(3000, 8000);
  CHECK(multi_relay_outage(s, 2).probability ==
        doctest::Approx(0.0012817904455845925).epsilon(1e-9));
  CHECK(multi_relay_outage(s, 3).probability ==
        doctest::Approx(2.669779085942972e-16).epsilon(1e-7));
}

TEST_CASE("min hops for an outage target") {
  const auto s = reference(3000, 8000);
  const auto h = min_hops_for_outage_target(s, 1e-3);
  REQUIRE(h.min_hops);
  CHECK(*h.min_hops == 3);
  CHECK(h.sweep.size() == kDefaultMaxHops);
  // Exhaustive cross-check.
  std::uint32_t first = 0;
  for (std::uint32_t n = 1; n <= kDefaultMaxHops && first == 0; ++n)
    if (multi_relay_outage(s, n).probability <= 1e-3) first = n;
  CHECK(first == *h.min_hops);
  for (std::uint32_t n = 0; n < h.sweep.size(); ++n)
    CHECK(h.sweep[n].probability == multi_relay_outage(s, n + 1).probability);

  const auto none = min_hops_for_outage_target(s, 1e-3, 2);
  CHECK_FALSE(none.min_hops);
  CHECK(none.sweep.size() == 2);
}

TEST_CASE("outage target validation") {
  const auto s = reference();
  for (double eps : {0.0, 1.0, -0.5, 1.5, std::nan("")})
    CHECK(code_of([&] { min_hops_for_outage_target(s, eps); }) == Errc::argument);
  CHECK(code_of([&] { min_hops_for_outage_target(s, 0.1, 0); }) == Errc::argument);
  OutageQuery q;
  q.scenario = s;
  q.target_outage = 1.0;
  CHECK(code_of([&] { q.validate(); }) == Errc::argument);
  q.target_outage = 0.5;
  q.n_hops = 0;
  CHECK(code_of([&] { q.validate(); }) == Errc::argument);
}

TEST_CASE("closed-form and root-solve outage agree closely") {
  for (double d : {500.0, 2000.0, 3000.0, 4000.0}) {
    const auto s = reference(100, d);
    const double a = single_relay_outage(s).probability;
    const double b = single_relay_outage(s, CdfOptions{SplitSolver::root_solve}).probability;
    CHECK(std::abs(a - b) < 0.02);
  }
}
