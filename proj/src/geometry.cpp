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

#include "geometry.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include "errors.hpp"

namespace leorelay {

namespace {

constexpr double kClampSlack = 1e-12;
constexpr double kBisectionTolerance = 1e-12;

void check_dome_angle(double theta, const char* name) {
  if (!(theta > 0.0 && theta < kPi))
    fail(Errc::domain, name, " = ", theta, " rad outside (0, pi)");
}

void check_separation(double c) {
  if (!(c >= 0.0 && c <= kPi)) fail(Errc::domain, "cap separation ", c, " rad outside [0, pi]");
}

template <unsigned N>
double slice_integral(double theta_d, double theta_o, double radius) {
  const double half = theta_d / 2;
  const double cone_radius = radius * std::sin(half);
  // l_lo / R_c = tan(half - theta_o) / tan(half).
  const double phi_lo = clamped_asin(std::tan(half - theta_o) / std::tan(half));
  if (phi_lo >= kPi / 2) return 0.0;
  auto integrand = [&](double phi) {
    const double perp = cone_radius * std::cos(phi);
    return 2.0 * radius * clamped_asin(perp / radius) * perp;
  };
  return boost::math::quadrature::gauss<double, N>::integrate(integrand, phi_lo, kPi / 2);
}

// Moves (raw1, s - raw1) onto the feasible segment keeping the sum.
OverlapSplit project(double raw1, double s, double theta_d1, double theta_d2,
                     SplitMethod method) {
  OverlapSplit out;
  out.method = method;
  out.raw_o1_rad = raw1;
  out.raw_o2_rad = s - raw1;
  const double lo = std::max(0.0, s - theta_d2);
  const double hi = std::min(theta_d1, s);
  const double o1 = std::clamp(raw1, lo, hi);
  out.clamped = o1 != raw1;
  out.theta_o1_rad = o1;
  // s - (s - theta_d2) can round above theta_d2.
  out.theta_o2_rad = std::clamp(s - o1, 0.0, theta_d2);
  return out;
}

double intersecting_width(double theta_d1, double theta_d2, double c) {
  check_dome_angle(theta_d1, "theta_d1");
  check_dome_angle(theta_d2, "theta_d2");
  check_separation(c);
  const double s = theta_d1 / 2 + theta_d2 / 2 - c;
  if (!(s > 0.0))
    fail(Errc::precondition, "caps do not intersect: theta_d1/2 + theta_d2/2 = ",
         theta_d1 / 2 + theta_d2 / 2, " <= c = ", c);
  return s;
}

}  // namespace

SphericalCap::SphericalCap(double max_dome_angle_rad) : max_dome_angle_(max_dome_angle_rad) {
  check_dome_angle(max_dome_angle_rad, "max dome angle");
}

const char* to_string(SplitMethod m) {
  switch (m) {
    case SplitMethod::closed_form: return "closed_form";
    case SplitMethod::root_solve: return "root_solve";
    case SplitMethod::symmetric_limit: return "symmetric_limit";
    case SplitMethod::containment: return "containment";
  }
  return "unknown";
}

const char* to_string(SplitSolver s) {
  return s == SplitSolver::closed_form ? "closed_form" : "root_solve";
}

double clamped_asin(double x) {
  if (std::abs(x) > 1.0 + kClampSlack) fail(Errc::internal, "asin argument ", x, " outside [-1, 1]");
  return std::asin(std::clamp(x, -1.0, 1.0));
}

double clamped_acos(double x) {
  if (std::abs(x) > 1.0 + kClampSlack) fail(Errc::internal, "acos argument ", x, " outside [-1, 1]");
  return std::acos(std::clamp(x, -1.0, 1.0));
}

double central_angle_from_chord(double chord_km, double sphere_radius_km) {
  if (!(sphere_radius_km > 0.0)) fail(Errc::domain, "radius must be positive, got ", sphere_radius_km);
  if (!(chord_km >= 0.0 && chord_km <= 2.0 * sphere_radius_km))
    fail(Errc::domain, "chord ", chord_km, " km outside [0, ", 2.0 * sphere_radius_km, "]");
  return 2.0 * clamped_asin(chord_km / (2.0 * sphere_radius_km));
}

double chord_from_central_angle(double angle_rad, double sphere_radius_km) {
  if (!(sphere_radius_km > 0.0)) fail(Errc::domain, "radius must be positive, got ", sphere_radius_km);
  if (!(angle_rad >= 0.0 && angle_rad <= kPi))
    fail(Errc::domain, "central angle ", angle_rad, " rad outside [0, pi]");
  return 2.0 * sphere_radius_km * std::sin(angle_rad / 2);
}

double cap_full_area(const SphericalCap& cap, double radius_km) {
  if (!(radius_km > 0.0)) fail(Errc::domain, "radius must be positive, got ", radius_km);
  // 1 - cos(x) = 2 sin^2(x / 2) keeps small caps accurate.
  const double s = std::sin(cap.half_angle_rad() / 2);
  return 4.0 * kPi * radius_km * radius_km * s * s;
}

double cap_slice_area(double theta_d_rad, double theta_o_rad, double radius_km,
                      QuadratureOrder order) {
  check_dome_angle(theta_d_rad, "theta_d");
  if (!(radius_km > 0.0)) fail(Errc::domain, "radius must be positive, got ", radius_km);
  if (!(theta_o_rad >= 0.0 && theta_o_rad <= theta_d_rad))
    fail(Errc::domain, "theta_o = ", theta_o_rad, " rad outside [0, theta_d = ", theta_d_rad, "]");
  if (order == QuadratureOrder::refined)
    return slice_integral<256>(theta_d_rad, theta_o_rad, radius_km);
  return slice_integral<128>(theta_d_rad, theta_o_rad, radius_km);
}

QuadratureCheck cap_slice_area_self_check(double theta_d_rad, double theta_o_rad,
                                          double radius_km) {
  QuadratureCheck q;
  q.standard = cap_slice_area(theta_d_rad, theta_o_rad, radius_km, QuadratureOrder::standard);
  q.refined = cap_slice_area(theta_d_rad, theta_o_rad, radius_km, QuadratureOrder::refined);
  q.relative_change = q.refined == 0.0 ? std::abs(q.standard)
                                       : std::abs(q.refined - q.standard) / std::abs(q.refined);
  return q;
}

OverlapSplit overlap_split_closed_form(double theta_d1_rad, double theta_d2_rad, double c_rad) {
  const double s = intersecting_width(theta_d1_rad, theta_d2_rad, c_rad);
  const double half1 = theta_d1_rad / 2;
  const double a = std::cos(half1);
  const double b = std::cos(theta_d2_rad / 2);
  if (std::abs(a - b) < kSymmetricThreshold)
    return project(s / 2, s, theta_d1_rad, theta_d2_rad, SplitMethod::symmetric_limit);

  const double disc = 2.0 * a * a - 4.0 * a * b + 2.0 * b * b + a * b * c_rad * c_rad;
  if (disc < 0.0)
    fail(Errc::numerical, "negative discriminant ", disc, " (a = ", a, ", b = ", b,
         ", c = ", c_rad, ")");
  // (a c - sqrt(D)) / (a - b) rationalised; a c + sqrt(D) > 0 away from the
  // symmetric case.
  const double offset1 = (a * c_rad * c_rad - 2.0 * (a - b)) / (a * c_rad + std::sqrt(disc));
  return project(half1 - offset1, s, theta_d1_rad, theta_d2_rad, SplitMethod::closed_form);
}

OverlapSplit overlap_split_root_solve(double theta_d1_rad, double theta_d2_rad, double c_rad) {
  const double s = intersecting_width(theta_d1_rad, theta_d2_rad, c_rad);
  const double half1 = theta_d1_rad / 2;
  const double half2 = theta_d2_rad / 2;
  const double a = std::cos(half1);
  const double b = std::cos(half2);
  // Cross-multiplied ratio condition; both cosines in the denominators stay
  // positive on the bracket.
  auto f = [&](double o1) { return a * std::cos(half2 - (s - o1)) - b * std::cos(half1 - o1); };

  const double mid = s / 2;
  if (f(mid) == 0.0) return project(mid, s, theta_d1_rad, theta_d2_rad, SplitMethod::root_solve);
  const double f_lo = f(0.0);
  const double f_hi = f(s);
  if (f_lo == 0.0) return project(0.0, s, theta_d1_rad, theta_d2_rad, SplitMethod::root_solve);
  if (f_hi == 0.0) return project(s, s, theta_d1_rad, theta_d2_rad, SplitMethod::root_solve);
  if ((f_lo < 0.0) == (f_hi < 0.0))
    fail(Errc::degenerate, "no sign change of the shared-chord condition on [0, ", s,
         "] (theta_d1 = ", theta_d1_rad, ", theta_d2 = ", theta_d2_rad, ", c = ", c_rad,
         "): one cap contains the other");

  auto tol = [](double lo, double hi) { return hi - lo <= kBisectionTolerance; };
  const auto bracket = boost::math::tools::bisect(f, 0.0, s, tol);
  const double root = bracket.first + (bracket.second - bracket.first) / 2;
  return project(root, s, theta_d1_rad, theta_d2_rad, SplitMethod::root_solve);
}

double split_ratio_residual(double theta_d1_rad, double theta_d2_rad, const OverlapSplit& split) {
  const double h1 = theta_d1_rad / 2;
  const double h2 = theta_d2_rad / 2;
  return std::cos(h1) / std::cos(h1 - split.theta_o1_rad) -
         std::cos(h2) / std::cos(h2 - split.theta_o2_rad);
}

OverlapSplit resolve_overlap_split(double theta_d1_rad, double theta_d2_rad, double c_rad,
                                   SplitSolver solver) {
  intersecting_width(theta_d1_rad, theta_d2_rad, c_rad);
  const double half1 = theta_d1_rad / 2;
  const double half2 = theta_d2_rad / 2;
  if (half1 + c_rad <= half2 || half2 + c_rad <= half1) {
    OverlapSplit nested;
    nested.method = SplitMethod::containment;
    const bool first_inside = half1 + c_rad <= half2;
    nested.theta_o1_rad = first_inside ? theta_d1_rad : 0.0;
    nested.theta_o2_rad = first_inside ? 0.0 : theta_d2_rad;
    nested.raw_o1_rad = nested.theta_o1_rad;
    nested.raw_o2_rad = nested.theta_o2_rad;
    return nested;
  }
  return solver == SplitSolver::root_solve
             ? overlap_split_root_solve(theta_d1_rad, theta_d2_rad, c_rad)
             : overlap_split_closed_form(theta_d1_rad, theta_d2_rad, c_rad);
}

FeasibilityReport feasibility_check(const RelayScenario& scenario) {
  scenario.validate();
  const double c = scenario.ground_central_angle();
  FeasibilityReport r;
  r.margin_rad = scenario.theta_m1_rad + scenario.theta_m2_rad - 2.0 * c;
  r.intersects = r.margin_rad > 0.0;
  r.los_valid = scenario.theta_m1_rad < c && scenario.theta_m2_rad < c;
  return r;
}

double max_dome_angle_from_elevation(const GeometryConfig& geometry, double elevation_rad) {
  geometry.validate();
  if (!(elevation_rad >= 0.0 && elevation_rad < kPi / 2))
    fail(Errc::domain, "elevation ", elevation_rad, " rad outside [0, pi/2)");
  const double ratio = geometry.earth_radius_km / geometry.shell_radius_km;
  return 2.0 * (clamped_acos(ratio * std::cos(elevation_rad)) - elevation_rad);
}

}  // namespace leorelay
