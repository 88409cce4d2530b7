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

// Seeded Monte-Carlo ground truth for the analytic formulas.
//
// Trials are grouped into chunks of `chunk_size`; chunk k draws from its own
// stream seeded by (seed, k). Chunks run on any number of worker threads and
// are merged in chunk order, so every estimate depends only on
// (seed, trials, chunk_size).
//
// Geometry is canonical: the transmitter sits at +z, the receiver is rotated
// towards +x by the ground central angle. The model is rotation invariant so
// nothing is lost by fixing them.

#ifndef LEORELAY_MONTE_CARLO_HPP_
#define LEORELAY_MONTE_CARLO_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "scenario.hpp"

namespace leorelay {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct McConfig {
  std::uint64_t trials = 200000;
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 4096;
  unsigned workers = 0;  // 0: hardware concurrency. Never affects results.

  void validate() const;
};

struct McEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t substream);

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Binomial(n, p) count; p outside (0, 1) is clamped.
  std::uint64_t binomial(std::uint64_t n, double p);

 private:
  std::mt19937_64 engine_;
};

// z uniform on [-1, 1], azimuth uniform on [0, 2 pi).
Vec3 sample_unit_sphere(RandomStream& stream);

struct GroundNodes {
  Vec3 tx;
  Vec3 rx;
};

GroundNodes place_ground_nodes(const RelayScenario& scenario);

// One constellation draw: the smallest dome angle between the transmitter
// and a satellite visible to both nodes, or nullopt on relay outage.
std::optional<double> trial_contact_angle(const RelayScenario& scenario, RandomStream& stream);

// All contact angles of a run, sorted ascending, plus the outage count.
struct ContactSample {
  std::vector<double> angles;
  std::uint64_t outages = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string fingerprint;

  std::uint64_t count_at_most(double theta) const;
  // Defective: fraction of all trials; normalized: fraction of non-outage trials.
  double cdf(double theta, CdfConvention convention = CdfConvention::defective) const;
  double std_error(double theta, CdfConvention convention = CdfConvention::defective) const;
};

ContactSample simulate_contact_angles(const RelayScenario& scenario, const McConfig& mc);

// Throws Errc::numerical in normalized mode when every trial was an outage.
CdfCurve empirical_cdf(const ContactSample& sample, std::span<const double> grid,
                       CdfConvention convention = CdfConvention::defective);
CdfCurve empirical_cdf(const RelayScenario& scenario, const McConfig& mc,
                       std::span<const double> grid,
                       CdfConvention convention = CdfConvention::defective);

// sup over theta of |cdf(theta) - empirical(theta)|, evaluated on both sides
// of every jump of the empirical CDF and at the support's upper end.
double ks_statistic(const ContactSample& sample, const std::function<double(double)>& cdf,
                    double upper_rad, CdfConvention convention = CdfConvention::defective);

// Trial mean of g(d_c) with outage trials contributing zero.
McEstimate contact_distance_mean(const ContactSample& sample, const GeometryConfig& geometry,
                                 const std::function<double(double)>& g);

McEstimate outage_frequency(const RelayScenario& scenario, const McConfig& mc);

enum class HopSampling {
  independent,  // each hop draws its own constellation
  shared,       // all hops of a trial see one constellation
};

McEstimate multi_hop_outage_frequency(const RelayScenario& scenario, std::uint32_t n_hops,
                                      const McConfig& mc,
                                      HopSampling sampling = HopSampling::independent);

// Hit-count area of the slice of a cap (dome angle theta_d) beyond the plane
// through the sphere centre whose trace makes angle theta_d/2 - theta_o with
// the cap axis.
McEstimate slice_area_estimate(double theta_d_rad, double theta_o_rad, double radius_km,
                               const McConfig& mc);

// Hit-count area of {angle to tx <= theta} cut with the receiver cap, on the
// orbital shell.
McEstimate overlap_area_estimate(const RelayScenario& scenario, double theta_rad,
                                 const McConfig& mc);

// Fraction of sampled directions within `alpha_rad` of a fixed axis.
McEstimate cap_fraction_estimate(double alpha_rad, const McConfig& mc);

}  // namespace leorelay

#endif  // LEORELAY_MONTE_CARLO_HPP_
