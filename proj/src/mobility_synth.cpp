// Copyright 2026 The Hometown Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hometown/mobility_synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

namespace {

constexpr double kHomeLatitudeLimitDeg = 60.0;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidParams, what);
}

}  // namespace

void check_pareto_params(double exponent, double x_min_km, double r_cap_km) {
  require(std::isfinite(exponent) && exponent > 1.0,
          fmt::format("exponent must exceed 1, got {}", exponent));
  require(std::isfinite(x_min_km) && std::isfinite(r_cap_km) &&
              x_min_km > 0.0 && x_min_km < r_cap_km,
          fmt::format("need 0 < x_min < r_cap, got [{}, {}]", x_min_km, r_cap_km));
}

void SynthParams::validate() const {
  require(n_photos >= 1, "n_photos must be at least 1");
  require(home_fraction >= 0.0 && home_fraction <= 1.0,
          fmt::format("home_fraction {} outside [0, 1]", home_fraction));
  check_pareto_params(exponent, x_min_km, r_cap_km);
  require(home_fraction == 1.0 || n_travel_clusters >= 1,
          "travel photos requested but n_travel_clusters is 0");
  require(std::isfinite(travel_spread_km) && travel_spread_km >= 0.0,
          "travel_spread_km must be non-negative");
  require(std::isfinite(travel_min_km) && std::isfinite(travel_max_km) &&
              travel_min_km >= 0.0 && travel_min_km < travel_max_km,
          fmt::format("need 0 <= travel_min < travel_max, got [{}, {}]",
                      travel_min_km, travel_max_km));
}

double truncated_pareto_quantile(double u, double exponent, double x_min_km,
                                 double r_cap_km) {
  check_pareto_params(exponent, x_min_km, r_cap_km);
  if (u <= 0.0) return x_min_km;
  if (u >= 1.0) return r_cap_km;
  const double k = 1.0 - exponent;
  const double lo = std::pow(x_min_km, k);
  const double hi = std::pow(r_cap_km, k);
  const double x = std::pow(lo - u * (lo - hi), 1.0 / k);
  return std::clamp(x, x_min_km, r_cap_km);
}

double sample_truncated_pareto(SynthRng& rng, double exponent, double x_min_km,
                               double r_cap_km) {
  return truncated_pareto_quantile(rng.uniform01(), exponent, x_min_km,
                                   r_cap_km);
}

GeoPoint quantize(const GeoPoint& p) {
  // Adding 0.0 turns a rounded -0.0 into +0.0.
  return GeoPoint(std::round(p.lat_deg() * 1e6) / 1e6 + 0.0,
                  std::round(p.lon_deg() * 1e6) / 1e6 + 0.0);
}

std::string synthetic_user_id(std::size_t user_index) {
  return fmt::format("user_{:05}", user_index);
}

SyntheticUser generate_user(const SynthParams& params, std::size_t user_index) {
  params.validate();
  SynthRng rng(params.seed ^ static_cast<std::uint64_t>(user_index));

  SyntheticUser user;
  user.user_id = synthetic_user_id(user_index);

  // Uniform on the spherical band |lat| <= 60: sin(lat) is uniform.
  const double sin_limit =
      std::sin(kHomeLatitudeLimitDeg * std::numbers::pi / 180.0);
  const double lat =
      std::asin(rng.uniform(-sin_limit, sin_limit)) * 180.0 / std::numbers::pi;
  const double lon = rng.uniform(-180.0, 180.0);
  user.true_home = quantize(GeoPoint(lat, lon));

  for (std::size_t c = 0; c < params.n_travel_clusters; ++c) {
    const double distance = rng.uniform(params.travel_min_km, params.travel_max_km);
    const double bearing = rng.uniform(0.0, 360.0);
    user.travel_centers.push_back(
        quantize(geodesic_destination(user.true_home, bearing, distance)));
  }

  user.photos.reserve(params.n_photos);
  user.travel_cluster.reserve(params.n_photos);
  for (std::size_t p = 0; p < params.n_photos; ++p) {
    GeoPoint location;
    if (rng.uniform01() < params.home_fraction) {
      const double r = sample_truncated_pareto(rng, params.exponent,
                                               params.x_min_km, params.r_cap_km);
      location = geodesic_destination(user.true_home, rng.uniform(0.0, 360.0), r);
      user.travel_cluster.emplace_back(std::nullopt);
    } else {
      const auto c = std::min(
          static_cast<std::size_t>(rng.uniform01() *
                                   static_cast<double>(params.n_travel_clusters)),
          params.n_travel_clusters - 1);
      // sqrt(u) radius gives a uniform density over the disc.
      const double r = params.travel_spread_km * std::sqrt(rng.uniform01());
      location = geodesic_destination(user.travel_centers[c],
                                      rng.uniform(0.0, 360.0), r);
      user.travel_cluster.emplace_back(c);
    }
    user.photos.emplace_back(fmt::format("{}_p{:05}", user.user_id, p),
                             user.user_id, quantize(location));
  }
  return user;
}

std::vector<SyntheticUser> generate_cohort(const SynthParams& params,
                                           std::size_t n_users) {
  params.validate();
  require(n_users >= 1, "cohort needs at least one user");
  std::vector<SyntheticUser> cohort;
  cohort.reserve(n_users);
  for (std::size_t u = 0; u < n_users; ++u) {
    cohort.push_back(generate_user(params, u));
  }
  return cohort;
}

std::vector<double> home_photo_distances(
    const std::vector<SyntheticUser>& cohort) {
  std::vector<double> out;
  for (const SyntheticUser& user : cohort) {
    for (std::size_t p = 0; p < user.photos.size(); ++p) {
      if (user.travel_cluster[p]) continue;
      out.push_back(haversine_km(user.photos[p].location, user.true_home));
    }
  }
  return out;
}

std::vector<UserDataset> to_user_datasets(
    const std::vector<SyntheticUser>& cohort) {
  std::vector<UserDataset> out;
  out.reserve(cohort.size());
  for (const SyntheticUser& user : cohort) {
    out.emplace_back(user.user_id, user.photos, user.true_home);
  }
  return out;
}

}  // namespace hometown
