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

#include "scenario.hpp"

#include <charconv>
#include <cmath>

#include "errors.hpp"
#include "geometry.hpp"

namespace leorelay {

namespace {

std::string exact(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

GeometryConfig GeometryConfig::from_altitude(double altitude_km, double earth_radius_km) {
  if (!(altitude_km > 0.0) || !std::isfinite(altitude_km))
    fail(Errc::domain, "altitude must be positive, got ", altitude_km, " km");
  GeometryConfig g{earth_radius_km, earth_radius_km + altitude_km};
  g.validate();
  return g;
}

void GeometryConfig::validate() const {
  if (!(earth_radius_km > 0.0) || !std::isfinite(earth_radius_km))
    fail(Errc::domain, "earth radius must be positive, got ", earth_radius_km, " km");
  if (!(shell_radius_km > earth_radius_km) || !std::isfinite(shell_radius_km))
    fail(Errc::domain, "shell radius ", shell_radius_km,
         " km must exceed earth radius ", earth_radius_km, " km");
}

void RelayScenario::validate() const {
  geometry.validate();
  if (n_sat < 1) fail(Errc::domain, "n_sat must be >= 1");
  if (!(distance_km >= 0.0) || distance_km > 2.0 * geometry.earth_radius_km)
    fail(Errc::domain, "distance ", distance_km, " km outside [0, ",
         2.0 * geometry.earth_radius_km, "]");
  for (double t : {theta_m1_rad, theta_m2_rad}) {
    if (!(t > 0.0) || t > 2.0 * kPi)
      fail(Errc::domain, "max dome angle ", t, " rad outside (0, 2 pi]");
  }
}

void RelayScenario::validate_analytic() const {
  validate();
  for (double t : {theta_m1_rad, theta_m2_rad}) {
    if (!(t < kPi))
      fail(Errc::domain, "analytic formulas need max dome angle < pi, got ", t, " rad");
  }
}

double RelayScenario::ground_central_angle() const {
  return central_angle_from_chord(distance_km, geometry.earth_radius_km);
}

std::string RelayScenario::fingerprint() const {
  return "Re=" + exact(geometry.earth_radius_km) + ";Rsat=" + exact(geometry.shell_radius_km) +
         ";tm1=" + exact(theta_m1_rad) + ";tm2=" + exact(theta_m2_rad) +
         ";d=" + exact(distance_km) + ";N=" + std::to_string(n_sat);
}

}  // namespace leorelay
