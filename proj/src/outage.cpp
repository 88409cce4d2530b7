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

#include "outage.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "geometry.hpp"

namespace leorelay {

void OutageQuery::validate() const {
  scenario.validate();
  if (n_hops < 1) fail(Errc::argument, "n_hops must be >= 1");
  if (target_outage && !(*target_outage > 0.0 && *target_outage < 1.0))
    fail(Errc::argument, "target outage must lie in (0, 1), got ", *target_outage);
}

OutageResult single_relay_outage(const RelayScenario& scenario, const CdfOptions& options) {
  scenario.validate_analytic();
  OutageResult r;
  if (!feasibility_check(scenario).intersects) {
    r.infeasible = true;
    r.probability = 1.0;
    return r;
  }
  const AngleDomain dom = contact_angle_domain(scenario);
  const double area = overlap_area(scenario, dom.upper_rad, options.solver);
  // (1 - p)^N directly rather than 1 - F, which would lose everything below 1e-16.
  const double p = area / (4.0 * kPi * scenario.geometry.shell_radius_km *
                           scenario.geometry.shell_radius_km);
  if (p >= 1.0) {
    r.probability = 0.0;
  } else {
    r.probability = std::exp(static_cast<double>(scenario.n_sat) * std::log1p(-p));
  }
  return r;
}

double hop_chord_distance(double d_km, std::uint32_t n_hops, double earth_radius_km) {
  if (n_hops < 1) fail(Errc::argument, "n_hops must be >= 1");
  if (!(earth_radius_km > 0.0)) fail(Errc::domain, "earth radius must be positive");
  if (!(d_km >= 0.0 && d_km <= 2.0 * earth_radius_km))
    fail(Errc::domain, "distance ", d_km, " km outside [0, ", 2.0 * earth_radius_km, "]");
  if (n_hops == 1) return d_km;
  const double half_angle = clamped_asin(d_km / (2.0 * earth_radius_km));
  return 2.0 * earth_radius_km * std::sin(half_angle / static_cast<double>(n_hops));
}

OutageResult multi_relay_outage(const RelayScenario& scenario, std::uint32_t n_hops,
                                const CdfOptions& options) {
  scenario.validate_analytic();
  const double hop = hop_chord_distance(scenario.distance_km, n_hops,
                                        scenario.geometry.earth_radius_km);
  const OutageResult per_hop = single_relay_outage(scenario.with_distance(hop), options);
  if (n_hops == 1) return per_hop;
  OutageResult r;
  r.infeasible = per_hop.infeasible;
  if (per_hop.probability >= 1.0) {
    r.probability = 1.0;
  } else {
    r.probability = -std::expm1(static_cast<double>(n_hops) * std::log1p(-per_hop.probability));
  }
  return r;
}

HopSearch min_hops_for_outage_target(const RelayScenario& scenario, double epsilon,
                                     std::uint32_t n_max, const CdfOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail(Errc::argument, "outage target must lie in (0, 1), got ", epsilon);
  if (n_max < 1) fail(Errc::argument, "n_max must be >= 1");
  HopSearch out;
  out.sweep.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    out.sweep.push_back(multi_relay_outage(scenario, n, options));
    if (!out.min_hops && out.sweep.back().probability <= epsilon) out.min_hops = n;
  }
  return out;
}

}  // namespace leorelay
