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

// Distribution of the conditional contact angle: the dome angle between the
// transmitter and the closest satellite that both ground nodes can see, for
// N satellites placed uniformly and independently on the shell.
//
//   F(theta) = 1 - (1 - A(theta) / (4 pi R_sat^2))^N
//
// where A(theta) is the area of (transmitter cap of half-angle theta) cut
// with (receiver cap), computed from two slice areas. F is defective: its
// value at the upper end of the support is 1 - P(relay outage).

#ifndef LEORELAY_DISTRIBUTION_HPP_
#define LEORELAY_DISTRIBUTION_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "scenario.hpp"

namespace leorelay {

struct AngleDomain {
  double lower_rad = 0;
  double upper_rad = 0;
};

struct DistanceDomain {
  double lower_km = 0;
  double upper_km = 0;
};

enum class CdfConvention { defective, normalized };
enum class CurveSource { analytic, empirical };

const char* to_string(CdfConvention c);
const char* to_string(CurveSource s);

struct CdfPoint {
  double x = 0;  // angle (rad) or distance (km)
  double p = 0;
};

struct CdfCurve {
  std::vector<CdfPoint> points;
  CdfConvention convention = CdfConvention::defective;
  CurveSource source = CurveSource::analytic;
  std::string fingerprint;
  bool clamped = false;  // some abscissae fell outside the support

  // Empty when probabilities lie in [0, 1] and are nondecreasing and the
  // abscissae are strictly increasing; otherwise a description of the
  // first violation.
  std::string invariant_violation() const;
};

struct CdfOptions {
  SplitSolver solver = SplitSolver::closed_form;
};

// Support of the conditional contact angle:
//   [max{0, c - theta_m2/2}, min{theta_m1/2, c + theta_m2/2}],  c = 2 asin(d / 2 R_E).
// Throws Errc::precondition when the caps cannot intersect.
AngleDomain contact_angle_domain(const RelayScenario& scenario);

// Analytic area of (transmitter cap with half-angle theta) cut with the
// receiver cap, bounded above by the smaller cap's slice-formula area.
double overlap_area(const RelayScenario& scenario, double theta_rad,
                    SplitSolver solver = SplitSolver::closed_form);

// 1 - (1 - area / (4 pi R^2))^n, evaluated with log1p/expm1.
double hit_probability(double area_km2, double shell_radius_km, std::uint64_t n);

// Defective CDF. 0 below the support; held at F(upper) above it.
double conditional_contact_cdf(const RelayScenario& scenario, double theta_rad,
                               const CdfOptions& options = {});

// F(theta) / F(upper). Throws Errc::numerical when F(upper) == 0.
double conditional_contact_cdf_normalized(const RelayScenario& scenario, double theta_rad,
                                          const CdfOptions& options = {});

double conditional_contact_cdf(const RelayScenario& scenario, double theta_rad,
                               CdfConvention convention, const CdfOptions& options = {});

inline constexpr double kPdfStep = 1e-5;

struct PdfValue {
  double density = 0;      // per radian
  bool one_sided = false;  // theta within kPdfStep of a support edge
};

// Finite-difference density of the defective CDF; 0 outside the support.
PdfValue conditional_contact_pdf(const RelayScenario& scenario, double theta_rad,
                                 const CdfOptions& options = {});

// Law of cosines between ground node and satellite:
//   d_c^2 = R_E^2 + R_sat^2 - 2 R_E R_sat cos(theta_c).
double angle_to_distance(const GeometryConfig& geometry, double theta_c_rad);
double distance_to_angle(const GeometryConfig& geometry, double d_c_km);

DistanceDomain contact_distance_domain(const RelayScenario& scenario);

double conditional_contact_distance_cdf(const RelayScenario& scenario, double d_c_km,
                                        const CdfOptions& options = {});

// Stieltjes trapezoid sum of g(d_c) dF(d_c) on a uniform distance grid over
// the support. With g == 1 it returns F(upper) - F(lower).
double expect_over_contact_distance(const RelayScenario& scenario,
                                    const std::function<double(double)>& integrand,
                                    std::size_t grid_size, const CdfOptions& options = {});

// Uniform grid of `grid_size` points over the angle support.
std::vector<double> angle_grid(const RelayScenario& scenario, std::size_t grid_size);

CdfCurve analytic_cdf_curve(const RelayScenario& scenario, std::span<const double> thetas,
                            CdfConvention convention, const CdfOptions& options = {});
CdfCurve analytic_cdf_curve(const RelayScenario& scenario, std::size_t grid_size,
                            CdfConvention convention, const CdfOptions& options = {});

}  // namespace leorelay

#endif  // LEORELAY_DISTRIBUTION_HPP_
