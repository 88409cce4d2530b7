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

#include "monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "errors.hpp"
#include "geometry.hpp"
#include "outage.hpp"

namespace leorelay {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

// cos of a cap half-angle, or -inf when the cap is the whole sphere so that
// rounding in a dot product can never reject a point.
double cap_threshold(double half_angle) {
  if (half_angle >= kPi) return -std::numeric_limits<double>::infinity();
  return std::cos(half_angle);
}

// Runs fn(stream, count) for every chunk and returns the results in chunk
// order. Worker count only changes the schedule.
template <typename Partial, typename Fn>
std::vector<Partial> run_chunks(const McConfig& mc, Fn fn) {
  mc.validate();
  const std::uint64_t n_chunks = (mc.trials + mc.chunk_size - 1) / mc.chunk_size;
  std::vector<Partial> parts(n_chunks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= n_chunks) return;
      const std::uint64_t begin = k * mc.chunk_size;
      const std::uint64_t count = std::min(mc.chunk_size, mc.trials - begin);
      try {
        RandomStream stream(mc.seed, k);
        parts[k] = fn(stream, count);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  unsigned workers = mc.workers != 0 ? mc.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, n_chunks));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return parts;
}

struct Counts {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

McEstimate binomial_estimate(const std::vector<Counts>& parts, double scale, std::uint64_t seed) {
  Counts total;
  for (const Counts& c : parts) {
    total.hits += c.hits;
    total.trials += c.trials;
  }
  const double n = static_cast<double>(total.trials);
  const double p = static_cast<double>(total.hits) / n;
  McEstimate e;
  e.estimate = scale * p;
  e.std_error = scale * std::sqrt(p * (1.0 - p) / n);
  e.trials = total.trials;
  e.seed = seed;
  return e;
}

// Satellites outside the transmitter cap never matter, so a constellation
// is drawn as Binomial(n, cap fraction) points uniform on that cap. Same law
// as n points uniform on the sphere, at a fraction of the draws.
struct ThinnedCap {
  double cos_half;  // -inf for the whole sphere
  double fraction;  // (1 - cos_half) / 2

  explicit ThinnedCap(double half_angle) : cos_half(cap_threshold(half_angle)) {
    const double s = std::sin(std::min(half_angle, kPi) / 2);
    fraction = half_angle >= kPi ? 1.0 : s * s;
  }

  std::uint64_t count(RandomStream& rs, std::uint64_t n) const {
    return fraction >= 1.0 ? n : rs.binomial(n, fraction);
  }

  // z uniform on [cos_half, 1].
  double draw_z(RandomStream& rs) const {
    const double u = rs.uniform();
    return fraction >= 1.0 ? 2.0 * u - 1.0 : 1.0 - 2.0 * fraction * u;
  }
};

double draw_x(RandomStream& rs, double z) {
  return std::sqrt((1.0 - z) * (1.0 + z)) * std::cos(kTwoPi * rs.uniform());
}

// Is any of n uniform satellites inside both caps? Caps are centred on the
// pole and on (sin c, 0, cos c). Stops at the first witness.
bool any_in_both(RandomStream& rs, std::uint64_t n, const ThinnedCap& cap1, double cos2,
                 double sin_c, double cos_c) {
  const std::uint64_t k = cap1.count(rs, n);
  for (std::uint64_t i = 0; i < k; ++i) {
    const double z = cap1.draw_z(rs);
    if (draw_x(rs, z) * sin_c + z * cos_c >= cos2) return true;
  }
  return false;
}

void check_hops(std::uint32_t n_hops) {
  if (n_hops < 1) fail(Errc::argument, "n_hops must be >= 1");
}

}  // namespace

void McConfig::validate() const {
  if (trials < 1) fail(Errc::argument, "trials must be >= 1");
  if (chunk_size < 1) fail(Errc::argument, "chunk_size must be >= 1");
}

std::uint64_t RandomStream::binomial(std::uint64_t n, double p) {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return n;
  std::binomial_distribution<std::uint64_t> dist(n, p);
  return dist(engine_);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32)};
  engine_.seed(seq);
}

Vec3 sample_unit_sphere(RandomStream& stream) {
  const double z = 2.0 * stream.uniform() - 1.0;
  const double phi = kTwoPi * stream.uniform();
  const double r = std::sqrt((1.0 - z) * (1.0 + z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

GroundNodes place_ground_nodes(const RelayScenario& scenario) {
  scenario.validate();
  const double c = scenario.ground_central_angle();
  return {{0.0, 0.0, 1.0}, {std::sin(c), 0.0, std::cos(c)}};
}

std::optional<double> trial_contact_angle(const RelayScenario& scenario, RandomStream& stream) {
  const double c = scenario.ground_central_angle();
  const double sin_c = std::sin(c);
  const double cos_c = std::cos(c);
  const ThinnedCap cap1(scenario.theta_m1_rad / 2);
  const double cos2 = cap_threshold(scenario.theta_m2_rad / 2);

  // Closest to the transmitter means largest z. The azimuth is only drawn
  // when z could improve on the best so far.
  double best_z = -2.0;
  const std::uint64_t k = cap1.count(stream, scenario.n_sat);
  for (std::uint64_t i = 0; i < k; ++i) {
    const double z = cap1.draw_z(stream);
    if (z <= best_z) continue;
    if (draw_x(stream, z) * sin_c + z * cos_c >= cos2) best_z = z;
  }
  if (best_z < -1.0) return std::nullopt;
  return std::atan2(std::sqrt((1.0 - best_z) * (1.0 + best_z)), best_z);
}

std::uint64_t ContactSample::count_at_most(double theta) const {
  return static_cast<std::uint64_t>(std::upper_bound(angles.begin(), angles.end(), theta) -
                                    angles.begin());
}

double ContactSample::cdf(double theta, CdfConvention convention) const {
  const double k = static_cast<double>(count_at_most(theta));
  if (convention == CdfConvention::defective) return k / static_cast<double>(trials);
  if (angles.empty())
    fail(Errc::numerical, "normalized empirical CDF undefined: every trial was an outage");
  return k / static_cast<double>(angles.size());
}

double ContactSample::std_error(double theta, CdfConvention convention) const {
  const double p = cdf(theta, convention);
  const double n = convention == CdfConvention::defective ? static_cast<double>(trials)
                                                          : static_cast<double>(angles.size());
  return std::sqrt(p * (1.0 - p) / n);
}

ContactSample simulate_contact_angles(const RelayScenario& scenario, const McConfig& mc) {
  scenario.validate();
  struct Part {
    std::vector<double> angles;
    std::uint64_t outages = 0;
  };
  auto parts = run_chunks<Part>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Part p;
    p.angles.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (auto a = trial_contact_angle(scenario, rs)) {
        p.angles.push_back(*a);
      } else {
        ++p.outages;
      }
    }
    return p;
  });

  ContactSample out;
  out.trials = mc.trials;
  out.seed = mc.seed;
  out.fingerprint = scenario.fingerprint();
  std::size_t total = 0;
  for (const Part& p : parts) total += p.angles.size();
  out.angles.reserve(total);
  for (const Part& p : parts) {
    out.angles.insert(out.angles.end(), p.angles.begin(), p.angles.end());
    out.outages += p.outages;
  }
  std::sort(out.angles.begin(), out.angles.end());
  return out;
}

CdfCurve empirical_cdf(const ContactSample& sample, std::span<const double> grid,
                       CdfConvention convention) {
  CdfCurve curve;
  curve.convention = convention;
  curve.source = CurveSource::empirical;
  curve.fingerprint = sample.fingerprint;
  curve.points.reserve(grid.size());
  for (double t : grid) curve.points.push_back({t, sample.cdf(t, convention)});
  return curve;
}

CdfCurve empirical_cdf(const RelayScenario& scenario, const McConfig& mc,
                       std::span<const double> grid, CdfConvention convention) {
  return empirical_cdf(simulate_contact_angles(scenario, mc), grid, convention);
}

double ks_statistic(const ContactSample& sample, const std::function<double(double)>& cdf,
                    double upper_rad, CdfConvention convention) {
  double denom = static_cast<double>(sample.trials);
  if (convention == CdfConvention::normalized) {
    if (sample.angles.empty())
      fail(Errc::numerical, "normalized empirical CDF undefined: every trial was an outage");
    denom = static_cast<double>(sample.angles.size());
  }
  double sup = 0.0;
  const std::size_t m = sample.angles.size();
  for (std::size_t i = 0; i < m; ++i) {
    // Ties: only the last copy of a value carries the full jump.
    if (i + 1 < m && sample.angles[i + 1] == sample.angles[i]) continue;
    const double f = cdf(sample.angles[i]);
    std::size_t first = i;
    while (first > 0 && sample.angles[first - 1] == sample.angles[i]) --first;
    sup = std::max(sup, std::abs(f - static_cast<double>(i + 1) / denom));
    sup = std::max(sup, std::abs(f - static_cast<double>(first) / denom));
  }
  sup = std::max(sup, std::abs(cdf(upper_rad) - static_cast<double>(m) / denom));
  return sup;
}

McEstimate contact_distance_mean(const ContactSample& sample, const GeometryConfig& geometry,
                                 const std::function<double(double)>& g) {
  if (sample.trials < 1) fail(Errc::argument, "empty sample");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double a : sample.angles) {
    const double v = g(angle_to_distance(geometry, a));
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(sample.trials);
  const double mean = sum / n;
  const double var = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
  return {mean, std::sqrt(var / n), sample.trials, sample.seed};
}

McEstimate outage_frequency(const RelayScenario& scenario, const McConfig& mc) {
  scenario.validate();
  const double c = scenario.ground_central_angle();
  const double sin_c = std::sin(c);
  const double cos_c = std::cos(c);
  const ThinnedCap cap1(scenario.theta_m1_rad / 2);
  const double cos2 = cap_threshold(scenario.theta_m2_rad / 2);
  auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Counts k;
    k.trials = count;
    for (std::uint64_t t = 0; t < count; ++t)
      if (!any_in_both(rs, scenario.n_sat, cap1, cos2, sin_c, cos_c)) ++k.hits;
    return k;
  });
  return binomial_estimate(parts, 1.0, mc.seed);
}

McEstimate multi_hop_outage_frequency(const RelayScenario& scenario, std::uint32_t n_hops,
                                      const McConfig& mc, HopSampling sampling) {
  scenario.validate();
  check_hops(n_hops);
  const double hop_km =
      hop_chord_distance(scenario.distance_km, n_hops, scenario.geometry.earth_radius_km);
  const double c = scenario.with_distance(hop_km).ground_central_angle();
  const double cos1 = cap_threshold(scenario.theta_m1_rad / 2);
  const double cos2 = cap_threshold(scenario.theta_m2_rad / 2);

  if (sampling == HopSampling::independent) {
    const ThinnedCap cap1(scenario.theta_m1_rad / 2);
    const double sin_c = std::sin(c);
    const double cos_c = std::cos(c);
    auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
      Counts k;
      k.trials = count;
      for (std::uint64_t t = 0; t < count; ++t) {
        for (std::uint32_t h = 0; h < n_hops; ++h) {
          if (!any_in_both(rs, scenario.n_sat, cap1, cos2, sin_c, cos_c)) {
            ++k.hits;
            break;
          }
        }
      }
      return k;
    });
    return binomial_estimate(parts, 1.0, mc.seed);
  }

  // Shared: relays sit on one great circle, node k at angle k c from the pole.
  std::vector<Vec3> nodes(n_hops + 1);
  for (std::uint32_t k = 0; k <= n_hops; ++k) {
    const double a = c * static_cast<double>(k);
    nodes[k] = {std::sin(a), 0.0, std::cos(a)};
  }
  auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Counts k;
    k.trials = count;
    std::vector<Vec3> sats(scenario.n_sat);
    for (std::uint64_t t = 0; t < count; ++t) {
      for (Vec3& s : sats) s = sample_unit_sphere(rs);
      for (std::uint32_t h = 0; h < n_hops; ++h) {
        const bool served = std::any_of(sats.begin(), sats.end(), [&](const Vec3& s) {
          return dot(s, nodes[h]) >= cos1 && dot(s, nodes[h + 1]) >= cos2;
        });
        if (!served) {
          ++k.hits;
          break;
        }
      }
    }
    return k;
  });
  return binomial_estimate(parts, 1.0, mc.seed);
}

McEstimate slice_area_estimate(double theta_d_rad, double theta_o_rad, double radius_km,
                               const McConfig& mc) {
  if (!(theta_d_rad > 0.0 && theta_d_rad < kPi))
    fail(Errc::domain, "theta_d = ", theta_d_rad, " rad outside (0, pi)");
  if (!(theta_o_rad >= 0.0 && theta_o_rad <= theta_d_rad))
    fail(Errc::domain, "theta_o = ", theta_o_rad, " rad outside [0, theta_d = ", theta_d_rad, "]");
  if (!(radius_km > 0.0)) fail(Errc::domain, "radius must be positive, got ", radius_km);
  const double half = theta_d_rad / 2;
  const double cos_half = std::cos(half);
  const double tilt = half - theta_o_rad;
  const double nx = std::cos(tilt);
  const double nz = -std::sin(tilt);
  auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Counts k;
    k.trials = count;
    for (std::uint64_t t = 0; t < count; ++t) {
      const double z = 2.0 * rs.uniform() - 1.0;
      if (z < cos_half) continue;
      const double x = std::sqrt((1.0 - z) * (1.0 + z)) * std::cos(kTwoPi * rs.uniform());
      if (x * nx + z * nz >= 0.0) ++k.hits;
    }
    return k;
  });
  return binomial_estimate(parts, 4.0 * kPi * radius_km * radius_km, mc.seed);
}

McEstimate overlap_area_estimate(const RelayScenario& scenario, double theta_rad,
                                 const McConfig& mc) {
  scenario.validate();
  if (!(theta_rad >= 0.0 && theta_rad <= kPi))
    fail(Errc::domain, "theta ", theta_rad, " rad outside [0, pi]");
  const double c = scenario.ground_central_angle();
  const double sin_c = std::sin(c);
  const double cos_c = std::cos(c);
  const ThinnedCap cap1(theta_rad);
  const double cos2 = cap_threshold(scenario.theta_m2_rad / 2);
  const double radius = scenario.geometry.shell_radius_km;
  auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Counts k;
    k.trials = count;
    for (std::uint64_t t = 0; t < count; ++t)
      if (any_in_both(rs, 1, cap1, cos2, sin_c, cos_c)) ++k.hits;
    return k;
  });
  return binomial_estimate(parts, 4.0 * kPi * radius * radius, mc.seed);
}

McEstimate cap_fraction_estimate(double alpha_rad, const McConfig& mc) {
  if (!(alpha_rad >= 0.0 && alpha_rad <= kPi))
    fail(Errc::domain, "alpha ", alpha_rad, " rad outside [0, pi]");
  const double threshold = cap_threshold(alpha_rad);
  auto parts = run_chunks<Counts>(mc, [&](RandomStream& rs, std::uint64_t count) {
    Counts k;
    k.trials = count;
    for (std::uint64_t t = 0; t < count; ++t)
      if (sample_unit_sphere(rs).z >= threshold) ++k.hits;
    return k;
  });
  return binomial_estimate(parts, 1.0, mc.seed);
}

}  // namespace leorelay
