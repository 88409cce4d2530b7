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

#include "distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace leorelay {

namespace {

void require_feasible(const RelayScenario& scenario) {
  scenario.validate_analytic();
  const FeasibilityReport f = feasibility_check(scenario);
  if (!f.intersects)
    fail(Errc::precondition, "visibility caps do not intersect: theta_m1 + theta_m2 = ",
         scenario.theta_m1_rad + scenario.theta_m2_rad, " <= 4 asin(d / 2 R_E) = ",
         2.0 * scenario.ground_central_angle(), " (d = ", scenario.distance_km, " km)");
}

double cdf_in_support(const RelayScenario& s, const AngleDomain& dom, double theta,
                      SplitSolver solver) {
  if (theta <= dom.lower_rad) return 0.0;
  theta = std::min(theta, dom.upper_rad);
  const double area = overlap_area(s, theta, solver);
  return hit_probability(area, s.geometry.shell_radius_km, s.n_sat);
}

}  // namespace

const char* to_string(CdfConvention c) {
  return c == CdfConvention::defective ? "defective" : "normalized";
}

const char* to_string(CurveSource s) { return s == CurveSource::analytic ? "analytic" : "empirical"; }

std::string CdfCurve::invariant_violation() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CdfPoint& pt = points[i];
    if (!(pt.p >= 0.0 && pt.p <= 1.0)) {
      os << "probability " << pt.p << " at index " << i << " outside [0, 1]";
      return os.str();
    }
    if (i == 0) continue;
    if (!(pt.x > points[i - 1].x)) {
      os << "abscissa not strictly increasing at index " << i;
      return os.str();
    }
    if (pt.p < points[i - 1].p) {
      os << "probability decreases at index " << i << ": " << points[i - 1].p << " -> " << pt.p;
      return os.str();
    }
  }
  return {};
}

AngleDomain contact_angle_domain(const RelayScenario& scenario) {
  require_feasible(scenario);
  const double c = scenario.ground_central_angle();
  AngleDomain d;
  d.lower_rad = std::max(0.0, c - scenario.theta_m2_rad / 2);
  d.upper_rad = std::min(scenario.theta_m1_rad / 2, c + scenario.theta_m2_rad / 2);
  return d;
}

double overlap_area(const RelayScenario& scenario, double theta_rad, SplitSolver solver) {
  scenario.validate_analytic();
  if (!(theta_rad < kPi / 2)) fail(Errc::domain, "theta ", theta_rad, " rad outside [0, pi/2)");
  const double c = scenario.ground_central_angle();
  const double half2 = scenario.theta_m2_rad / 2;
  if (theta_rad <= 0.0 || theta_rad + half2 <= c) return 0.0;

  const double theta_d1 = 2.0 * theta_rad;
  const double theta_d2 = scenario.theta_m2_rad;
  const double radius = scenario.geometry.shell_radius_km;
  const OverlapSplit split = resolve_overlap_split(theta_d1, theta_d2, c, solver);
  double area = 0.0;
  if (split.theta_o1_rad > 0.0) area += cap_slice_area(theta_d1, split.theta_o1_rad, radius);
  if (split.theta_o2_rad > 0.0) area += cap_slice_area(theta_d2, split.theta_o2_rad, radius);
  if (split.method == SplitMethod::containment) return area;
  const double bound = std::min(cap_slice_area(theta_d1, theta_d1, radius),
                                cap_slice_area(theta_d2, theta_d2, radius));
  return std::min(area, bound);
}

double hit_probability(double area_km2, double shell_radius_km, std::uint64_t n) {
  const double p = area_km2 / (4.0 * kPi * shell_radius_km * shell_radius_km);
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double f = -std::expm1(static_cast<double>(n) * std::log1p(-p));
  return std::clamp(f, 0.0, 1.0);
}

double conditional_contact_cdf(const RelayScenario& scenario, double theta_rad,
                               const CdfOptions& options) {
  const AngleDomain dom = contact_angle_domain(scenario);
  return cdf_in_support(scenario, dom, theta_rad, options.solver);
}

double conditional_contact_cdf_normalized(const RelayScenario& scenario, double theta_rad,
                                          const CdfOptions& options) {
  const AngleDomain dom = contact_angle_domain(scenario);
  const double total = cdf_in_support(scenario, dom, dom.upper_rad, options.solver);
  if (!(total > 0.0))
    fail(Errc::numerical, "normalized CDF undefined: relay outage is certain (F(upper) = 0) for ",
         scenario.fingerprint());
  if (theta_rad >= dom.upper_rad) return 1.0;
  return std::min(1.0, cdf_in_support(scenario, dom, theta_rad, options.solver) / total);
}

double conditional_contact_cdf(const RelayScenario& scenario, double theta_rad,
                               CdfConvention convention, const CdfOptions& options) {
  return convention == CdfConvention::defective
             ? conditional_contact_cdf(scenario, theta_rad, options)
             : conditional_contact_cdf_normalized(scenario, theta_rad, options);
}

PdfValue conditional_contact_pdf(const RelayScenario& scenario, double theta_rad,
                                 const CdfOptions& options) {
  const AngleDomain dom = contact_angle_domain(scenario);
  PdfValue out;
  if (theta_rad < dom.lower_rad || theta_rad > dom.upper_rad) return out;
  auto F = [&](double t) { return cdf_in_support(scenario, dom, t, options.solver); };
  const double h = kPdfStep;
  if (theta_rad - h < dom.lower_rad) {
    out.one_sided = true;
    out.density = (F(theta_rad + h) - F(theta_rad)) / h;
  } else if (theta_rad + h > dom.upper_rad) {
    out.one_sided = true;
    out.density = (F(theta_rad) - F(theta_rad - h)) / h;
  } else {
    out.density = (F(theta_rad + h) - F(theta_rad - h)) / (2.0 * h);
  }
  return out;
}

double angle_to_distance(const GeometryConfig& geometry, double theta_c_rad) {
  geometry.validate();
  if (!(theta_c_rad >= 0.0 && theta_c_rad <= kPi))
    fail(Errc::domain, "contact angle ", theta_c_rad, " rad outside [0, pi]");
  const double re = geometry.earth_radius_km;
  const double rs = geometry.shell_radius_km;
  const double h = rs - re;
  const double s = std::sin(theta_c_rad / 2);
  // Same identity written as (R_sat - R_E)^2 + 4 R_E R_sat sin^2(theta/2).
  return std::sqrt(h * h + 4.0 * re * rs * s * s);
}

double distance_to_angle(const GeometryConfig& geometry, double d_c_km) {
  geometry.validate();
  const double re = geometry.earth_radius_km;
  const double rs = geometry.shell_radius_km;
  if (!(d_c_km >= rs - re && d_c_km <= rs + re))
    fail(Errc::domain, "contact distance ", d_c_km, " km outside [", rs - re, ", ", rs + re, "]");
  const double h = rs - re;
  const double s2 = (d_c_km - h) * (d_c_km + h) / (4.0 * re * rs);
  return 2.0 * clamped_asin(std::sqrt(std::max(0.0, s2)));
}

DistanceDomain contact_distance_domain(const RelayScenario& scenario) {
  const AngleDomain a = contact_angle_domain(scenario);
  return {angle_to_distance(scenario.geometry, a.lower_rad),
          angle_to_distance(scenario.geometry, a.upper_rad)};
}

double conditional_contact_distance_cdf(const RelayScenario& scenario, double d_c_km,
                                        const CdfOptions& options) {
  return conditional_contact_cdf(scenario, distance_to_angle(scenario.geometry, d_c_km), options);
}

double expect_over_contact_distance(const RelayScenario& scenario,
                                    const std::function<double(double)>& integrand,
                                    std::size_t grid_size, const CdfOptions& options) {
  if (grid_size < 2) fail(Errc::argument, "grid_size must be >= 2, got ", grid_size);
  const AngleDomain dom = contact_angle_domain(scenario);
  const DistanceDomain dd = contact_distance_domain(scenario);
  const double step = (dd.upper_km - dd.lower_km) / static_cast<double>(grid_size - 1);
  auto distance_at = [&](std::size_t i) {
    return i + 1 == grid_size ? dd.upper_km : dd.lower_km + step * static_cast<double>(i);
  };
  auto cdf_at = [&](double d) {
    const double theta = std::clamp(distance_to_angle(scenario.geometry, d), dom.lower_rad,
                                    dom.upper_rad);
    return cdf_in_support(scenario, dom, theta, options.solver);
  };

  double prev_d = distance_at(0);
  double prev_g = integrand(prev_d);
  double prev_f = cdf_at(prev_d);
  double total = 0.0;
  for (std::size_t i = 1; i < grid_size; ++i) {
    const double d = distance_at(i);
    const double g = integrand(d);
    const double f = cdf_at(d);
    total += 0.5 * (prev_g + g) * (f - prev_f);
    prev_g = g;
    prev_f = f;
  }
  return total;
}

std::vector<double> angle_grid(const RelayScenario& scenario, std::size_t grid_size) {
  if (grid_size < 2) fail(Errc::argument, "grid_size must be >= 2, got ", grid_size);
  const AngleDomain dom = contact_angle_domain(scenario);
  if (!(dom.upper_rad > dom.lower_rad))
    fail(Errc::degenerate, "empty contact angle support [", dom.lower_rad, ", ", dom.upper_rad, "]");
  std::vector<double> grid(grid_size);
  const double step = (dom.upper_rad - dom.lower_rad) / static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i)
    grid[i] = dom.lower_rad + step * static_cast<double>(i);
  grid.back() = dom.upper_rad;
  return grid;
}

CdfCurve analytic_cdf_curve(const RelayScenario& scenario, std::span<const double> thetas,
                            CdfConvention convention, const CdfOptions& options) {
  const AngleDomain dom = contact_angle_domain(scenario);
  CdfCurve curve;
  curve.convention = convention;
  curve.source = CurveSource::analytic;
  curve.fingerprint = scenario.fingerprint();
  double total = 1.0;
  if (convention == CdfConvention::normalized) {
    total = cdf_in_support(scenario, dom, dom.upper_rad, options.solver);
    if (!(total > 0.0))
      fail(Errc::numerical, "normalized CDF undefined: relay outage is certain for ",
           scenario.fingerprint());
  }
  curve.points.reserve(thetas.size());
  for (double t : thetas) {
    if (t < dom.lower_rad || t > dom.upper_rad) curve.clamped = true;
    double p = cdf_in_support(scenario, dom, t, options.solver);
    if (convention == CdfConvention::normalized)
      p = t >= dom.upper_rad ? 1.0 : std::min(1.0, p / total);
    curve.points.push_back({t, p});
  }
  return curve;
}

CdfCurve analytic_cdf_curve(const RelayScenario& scenario, std::size_t grid_size,
                            CdfConvention convention, const CdfOptions& options) {
  const std::vector<double> grid = angle_grid(scenario, grid_size);
  return analytic_cdf_curve(scenario, grid, convention, options);
}

}  // namespace leorelay
