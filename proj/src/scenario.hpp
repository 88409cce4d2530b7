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

#ifndef LEORELAY_SCENARIO_HPP_
#define LEORELAY_SCENARIO_HPP_

#include <cstdint>
#include <string>

namespace leorelay {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultEarthRadiusKm = 6371.0;

// The two concentric spheres everything lives on: ground nodes on the Earth
// sphere, satellites on the orbital shell.
struct GeometryConfig {
  double earth_radius_km = kDefaultEarthRadiusKm;
  double shell_radius_km = kDefaultEarthRadiusKm + 550.0;

  static GeometryConfig from_altitude(double altitude_km,
                                      double earth_radius_km = kDefaultEarthRadiusKm);

  double altitude_km() const { return shell_radius_km - earth_radius_km; }

  // Throws Errc::domain unless shell_radius > earth_radius > 0.
  void validate() const;
};

// One ground-satellite-ground relay instance. Dome angles are full cap
// widths measured at the Earth's centre; a cap's half-angle is theta_m / 2.
struct RelayScenario {
  GeometryConfig geometry;
  double theta_m1_rad = kPi / 4;  // transmitter visibility cap
  double theta_m2_rad = kPi / 4;  // receiver visibility cap
  double distance_km = 3000.0;    // chord between transmitter and receiver
  std::uint64_t n_sat = 3000;

  // Checks ranges: n_sat >= 1, 0 <= d <= 2 R_E, dome angles in (0, 2 pi].
  // Feasibility (cap intersection) is a separate question.
  void validate() const;

  // Dome angles must additionally lie in (0, pi) for the analytic formulas.
  void validate_analytic() const;

  // Central angle between the ground nodes, 2 asin(d / 2 R_E).
  double ground_central_angle() const;

  RelayScenario with_distance(double d_km) const {
    RelayScenario s = *this;
    s.distance_km = d_km;
    return s;
  }
  RelayScenario with_n_sat(std::uint64_t n) const {
    RelayScenario s = *this;
    s.n_sat = n;
    return s;
  }

  // Stable textual identity used in curve metadata.
  std::string fingerprint() const;
};

}  // namespace leorelay

#endif  // LEORELAY_SCENARIO_HPP_
