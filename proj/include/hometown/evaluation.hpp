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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hometown/geo.hpp"
#include "hometown/photo.hpp"
#include "hometown/predictor.hpp"

namespace hometown {

inline constexpr std::array<double, 5> kDefaultThresholdsKm = {10, 25, 50, 100,
                                                               500};
inline constexpr std::size_t kDefaultCdfResolution = 101;

struct UserError {
  std::string user_id;
  double error_km = 0.0;
  std::size_t n_photos = 0;
  std::size_t chosen_cluster_size = 0;
  GeoPoint predicted_home;
};

struct UserFailure {
  std::string user_id;
  std::string reason;
};

struct CdfPoint {
  double km = 0.0;
  double fraction = 0.0;
};

struct ThresholdFraction {
  double threshold_km = 0.0;
  double fraction = 0.0;
};

struct EvalReport {
  std::vector<UserError> per_user;  // ascending user_id
  std::vector<CdfPoint> cdf;        // empty when nothing was predicted
  std::vector<ThresholdFraction> fraction_within;
  std::vector<UserFailure> failures;  // ascending user_id
  std::optional<double> median_error_km;
  std::optional<double> mean_error_km;

  std::size_t n_failed() const noexcept { return failures.size(); }
};

/// Fraction of `sorted_errors` that are <= x.
double empirical_cdf_at(std::span<const double> sorted_errors, double x);

/// Empirical CDF sampled at `resolution` evenly spaced points over
/// [0, max error]. Throws Error(kEmptyErrors), or Error(kInvalidArgument)
/// for resolution < 2.
std::vector<CdfPoint> error_cdf(std::span<const double> errors,
                                std::size_t resolution);

double median(std::span<const double> values);

/// Predicts every user's home against their reported one. Users without a
/// reported home or whose prediction fails land in `failures` with the
/// reason. Throws Error(kEmptyCohort), Error(kNoGroundTruth) when nobody has
/// a reported home, and Error(kInvalidThreshold) unless thresholds are
/// positive and strictly increasing.
EvalReport evaluate_cohort(std::span<const UserDataset> users,
                           const PredictorConfig& config,
                           std::span<const double> thresholds_km,
                           std::size_t cdf_resolution = kDefaultCdfResolution);

}  // namespace hometown
