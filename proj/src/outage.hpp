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

// Relay outage: no satellite lies in both ground nodes' visibility caps.
// Multi-hop routes split the ground arc into n equal hops, each with its own
// independent constellation draw.

#ifndef LEORELAY_OUTAGE_HPP_
#define LEORELAY_OUTAGE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "distribution.hpp"
#include "scenario.hpp"

namespace leorelay {

inline constexpr std::uint32_t kDefaultMaxHops = 64;

struct OutageQuery {
  RelayScenario scenario;
  std::uint32_t n_hops = 1;
  std::optional<double> target_outage;

  void validate() const;
};

struct OutageResult {
  double probability = 1.0;
  bool infeasible = false;  // caps (of a hop) cannot intersect; probability is 1
};

// 1 - F(upper) with the defective CDF.
OutageResult single_relay_outage(const RelayScenario& scenario, const CdfOptions& options = {});

// Per-hop chord 2 R_E sin(asin(d / 2 R_E) / n). Returns d unchanged for n = 1.
double hop_chord_distance(double d_km, std::uint32_t n_hops, double earth_radius_km);

// 1 - (1 - P_single(hop chord))^n. Identical to single_relay_outage for n = 1.
OutageResult multi_relay_outage(const RelayScenario& scenario, std::uint32_t n_hops,
                                const CdfOptions& options = {});

struct HopSearch {
  std::optional<std::uint32_t> min_hops;  // empty when no n <= n_max reaches the target
  std::vector<OutageResult> sweep;        // sweep[i] is the outage for n = i + 1
};

// Smallest n in [1, n_max] with P_multi(n) <= epsilon. The whole sweep is
// returned for auditing. Throws Errc::argument unless 0 < epsilon < 1.
HopSearch min_hops_for_outage_target(const RelayScenario& scenario, double epsilon,
                                     std::uint32_t n_max = kDefaultMaxHops,
                                     const CdfOptions& options = {});

}  // namespace leorelay

#endif  // LEORELAY_OUTAGE_HPP_
