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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hometown/geo.hpp"
#include "hometown/photo.hpp"

namespace hometown {

/// Parameters of the home/travel mixture. Photos are either home photos,
/// placed at a truncated-Pareto distance from home, or travel photos,
/// scattered uniformly over a disc around one of the travel centers.
struct SynthParams {
  std::size_t n_photos = 685;
  double home_fraction = 0.8;
  double exponent = 2.38;
  double x_min_km = 0.5;
  double r_cap_km = 50.0;
  std::size_t n_travel_clusters = 3;
  double travel_spread_km = 30.0;
  double travel_min_km = 500.0;
  double travel_max_km = 10'000.0;
  std::uint64_t seed = 1;

  /// Throws Error(kInvalidParams).
  void validate() const;
};

/// Seedable uniform source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; doubles are built from the top 53
/// bits so no implementation-defined distribution is involved.
class SynthRng {
 public:
  explicit SynthRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

void check_pareto_params(double exponent, double x_min_km, double r_cap_km);

/// Inverse CDF of the Pareto(exponent) density restricted to
/// [x_min_km, r_cap_km]; u = 0 maps to x_min, u = 1 to r_cap.
double truncated_pareto_quantile(double u, double exponent, double x_min_km,
                                 double r_cap_km);

/// Throws Error(kInvalidParams) unless exponent > 1 and 0 < x_min < r_cap.
double sample_truncated_pareto(SynthRng& rng, double exponent, double x_min_km,
                               double r_cap_km);

struct SyntheticUser {
  std::string user_id;
  GeoPoint true_home;
  std::vector<PhotoRecord> photos;
  std::vector<GeoPoint> travel_centers;
  /// Per photo: the travel center it was drawn around, or nullopt for a home
  /// photo.
  std::vector<std::optional<std::size_t>> travel_cluster;
};

/// Coordinates are rounded to the 1e-6 degree serialization grid, so a
/// written and re-read cohort is identical to the generated one.
GeoPoint quantize(const GeoPoint& p);

std::string synthetic_user_id(std::size_t user_index);

/// Deterministic in (params.seed, user_index): the stream is seeded with
/// seed XOR user_index.
SyntheticUser generate_user(const SynthParams& params, std::size_t user_index);

std::vector<SyntheticUser> generate_cohort(const SynthParams& params,
                                           std::size_t n_users);

/// Home-photo distances to the true home, pooled over the cohort.
std::vector<double> home_photo_distances(const std::vector<SyntheticUser>& cohort);

/// Views the cohort as datasets whose reported home is the true home.
std::vector<UserDataset> to_user_datasets(const std::vector<SyntheticUser>& cohort);

}  // namespace hometown
