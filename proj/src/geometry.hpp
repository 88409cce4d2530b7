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

// Spherical geometry on the orbital shell: dome angles, cap areas, the
// projected-arc slice area of a cut cap, and the split of a two-cap
// intersection into one slice per cap.
//
// Angles are radians throughout. A cap is described by its maximum dome
// angle theta_d (the widest angle between two of its points, seen from the
// sphere centre), so its half-angle from the axis is theta_d / 2.

#ifndef LEORELAY_GEOMETRY_HPP_
#define LEORELAY_GEOMETRY_HPP_

#include "scenario.hpp"

namespace leorelay {

class SphericalCap {
 public:
  // Throws Errc::domain unless 0 < max_dome_angle < pi.
  explicit SphericalCap(double max_dome_angle_rad);

  double max_dome_angle_rad() const { return max_dome_angle_; }
  double half_angle_rad() const { return max_dome_angle_ / 2; }

 private:
  double max_dome_angle_;
};

enum class SplitMethod { closed_form, root_solve, symmetric_limit, containment };
enum class SplitSolver { closed_form, root_solve };

const char* to_string(SplitMethod m);
const char* to_string(SplitSolver s);

// Dome angles (theta_o1, theta_o2) of the two slices whose union is the
// intersection of two caps separated by central angle c. `clamped` records
// that the solver output left [0, theta_d_i] and was projected back onto
// the segment {o1 + o2 = s, 0 <= o_i <= theta_d_i}, s = theta_d1/2 +
// theta_d2/2 - c. raw_* hold the unprojected solver output.
struct OverlapSplit {
  double theta_o1_rad = 0;
  double theta_o2_rad = 0;
  SplitMethod method = SplitMethod::closed_form;
  bool clamped = false;
  double raw_o1_rad = 0;
  double raw_o2_rad = 0;
};

struct FeasibilityReport {
  bool intersects = false;  // theta_m1 + theta_m2 > 4 asin(d / 2 R_E)
  bool los_valid = false;   // theta_m_i < 2 asin(d / 2 R_E) for both caps (warning only)
  double margin_rad = 0;    // theta_m1 + theta_m2 - 4 asin(d / 2 R_E)
};

enum class QuadratureOrder { standard = 128, refined = 256 };

// Below 1e-9 the closed-form denominator (a - b) is treated as zero.
inline constexpr double kSymmetricThreshold = 1e-9;

// 2 asin(chord / 2R); chord must lie in [0, 2R].
double central_angle_from_chord(double chord_km, double sphere_radius_km);
// 2R sin(angle / 2); angle must lie in [0, pi].
double chord_from_central_angle(double angle_rad, double sphere_radius_km);

// Exact zone area 2 pi R^2 (1 - cos(theta_d / 2)).
double cap_full_area(const SphericalCap& cap, double radius_km);

// Area of the part of a cap (dome angle theta_d) cut off on one side, the
// cut having dome angle theta_o, computed as the integral of projected arc
// lengths
//
//   S = int_{l_lo}^{R sin(theta_d/2)} 2R asin( sqrt(R_c^2 - l^2) / R ) dl,
//   R_c = R sin(theta_d/2),  l_lo = R cos(theta_d/2) tan(theta_d/2 - theta_o).
//
// After l = R_c sin(phi) the integrand is smooth and a fixed Gauss-Legendre
// rule is applied. S(theta_d, 0) == 0 exactly; S is strictly increasing in
// theta_o. This is an approximation of the true surface area (about 2% low
// for a half cap at theta_d = pi/4).
double cap_slice_area(double theta_d_rad, double theta_o_rad, double radius_km,
                      QuadratureOrder order = QuadratureOrder::standard);

struct QuadratureCheck {
  double standard = 0;
  double refined = 0;
  double relative_change = 0;
};
// Evaluates the slice area at both node counts.
QuadratureCheck cap_slice_area_self_check(double theta_d_rad, double theta_o_rad,
                                          double radius_km);

// Closed-form split from the second-order expansion of the shared-chord
// condition, with a = cos(theta_d1/2), b = cos(theta_d2/2):
//   theta_o1 = theta_d1/2 - (a c - sqrt(D)) / (a - b),
//   theta_o2 = theta_d2/2 - (-b c + sqrt(D)) / (a - b),
//   D = 2a^2 - 4ab + 2b^2 + abc^2.
// Falls back to the equal split when |a - b| < kSymmetricThreshold.
// Throws Errc::precondition when the caps do not intersect.
OverlapSplit overlap_split_closed_form(double theta_d1_rad, double theta_d2_rad, double c_rad);

// Solves the exact system
//   o1 + o2 = theta_d1/2 + theta_d2/2 - c,
//   cos(theta_d1/2) / cos(theta_d1/2 - o1) = cos(theta_d2/2) / cos(theta_d2/2 - o2)
// by bisection on o1 in [0, s] to 1e-12 rad. Throws Errc::degenerate when
// the bracket holds no sign change (one cap contains the other).
OverlapSplit overlap_split_root_solve(double theta_d1_rad, double theta_d2_rad, double c_rad);

// Residual of the shared-chord ratio condition at a split.
double split_ratio_residual(double theta_d1_rad, double theta_d2_rad, const OverlapSplit& split);

// Split used for overlap areas: handles nesting of one cap inside the other
// (method = containment, the inner cap taken whole) and otherwise dispatches
// to the requested solver. Throws Errc::precondition for disjoint caps.
OverlapSplit resolve_overlap_split(double theta_d1_rad, double theta_d2_rad, double c_rad,
                                   SplitSolver solver);

FeasibilityReport feasibility_check(const RelayScenario& scenario);

// Maximum dome angle of the visibility cap of a ground node that sees
// satellites above `elevation_rad`: 2 (acos(R_E cos(eps) / R_sat) - eps).
double max_dome_angle_from_elevation(const GeometryConfig& geometry, double elevation_rad);

// asin/acos with the argument clamped to [-1, 1]; arguments further than
// 1e-12 outside throw Errc::internal.
double clamped_asin(double x);
double clamped_acos(double x);

}  // namespace leorelay

#endif  // LEORELAY_GEOMETRY_HPP_
