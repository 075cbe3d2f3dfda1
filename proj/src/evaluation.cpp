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

#include "hometown/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

double empirical_cdf_at(std::span<const double> sorted_errors, double x) {
  if (sorted_errors.empty()) return 0.0;
  const auto below = std::upper_bound(sorted_errors.begin(), sorted_errors.end(), x) -
                     sorted_errors.begin();
  return static_cast<double>(below) / static_cast<double>(sorted_errors.size());
}

std::vector<CdfPoint> error_cdf(std::span<const double> errors,
                                std::size_t resolution) {
  if (errors.empty()) {
    throw Error(ErrorKind::kEmptyErrors, "error CDF of no errors");
  }
  if (resolution < 2) {
    throw Error(ErrorKind::kInvalidArgument, "CDF resolution must be >= 2");
  }
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  const double max_error = sorted.back();
  std::vector<CdfPoint> cdf;
  cdf.reserve(resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    // The last point is pinned to the maximum so it always reports 1.
    const double km = i + 1 == resolution
                          ? max_error
                          : max_error * static_cast<double>(i) /
                                static_cast<double>(resolution - 1);
    cdf.push_back({km, empirical_cdf_at(sorted, km)});
  }
  return cdf;
}

double median(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyErrors, "median of nothing");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  return sorted.size() % 2 == 1 ? sorted[mid]
                                : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

EvalReport evaluate_cohort(std::span<const UserDataset> users,
                           const PredictorConfig& config,
                           std::span<const double> thresholds_km,
                           std::size_t cdf_resolution) {
  if (users.empty()) throw Error(ErrorKind::kEmptyCohort, "empty cohort");
  config.validate();
  if (cdf_resolution < 2) {
    throw Error(ErrorKind::kInvalidArgument, "CDF resolution must be >= 2");
  }
  for (std::size_t t = 0; t < thresholds_km.size(); ++t) {
    const double v = thresholds_km[t];
    if (!std::isfinite(v) || v <= 0.0 ||
        (t > 0 && v <= thresholds_km[t - 1])) {
      throw Error(ErrorKind::kInvalidThreshold,
                  "thresholds must be positive and strictly increasing");
    }
  }
  if (std::none_of(users.begin(), users.end(), [](const UserDataset& u) {
        return u.reported_home().has_value();
      })) {
    throw Error(ErrorKind::kNoGroundTruth, "no user has a reported home");
  }

  EvalReport report;
  for (const UserDataset& user : users) {
    if (!user.reported_home()) {
      report.failures.push_back({user.owner_id(), "no reported home"});
      continue;
    }
    try {
      const PredictionResult result =
          predict_hometown(user.photos(), config, user.reported_home());
      report.per_user.push_back({user.owner_id(), *result.error_km,
                                 user.photos().size(),
                                 result.chosen_cluster().size,
                                 result.predicted_home});
    } catch (const Error& e) {
      report.failures.push_back(
          {user.owner_id(), fmt::format("{}: {}", to_string(e.kind()), e.what())});
    }
  }
  std::sort(report.per_user.begin(), report.per_user.end(),
            [](const UserError& a, const UserError& b) {
              return a.user_id < b.user_id;
            });
  std::sort(report.failures.begin(), report.failures.end(),
            [](const UserFailure& a, const UserFailure& b) {
              return a.user_id < b.user_id;
            });

  for (std::size_t r = 1; r < report.per_user.size(); ++r) {
    if (report.per_user[r].user_id == report.per_user[r - 1].user_id) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("duplicate user {}", report.per_user[r].user_id));
    }
  }

  std::vector<double> errors;
  errors.reserve(report.per_user.size());
  for (const UserError& row : report.per_user) errors.push_back(row.error_km);
  std::sort(errors.begin(), errors.end());

  for (double t : thresholds_km) {
    report.fraction_within.push_back({t, empirical_cdf_at(errors, t)});
  }
  if (!errors.empty()) {
    report.cdf = error_cdf(errors, cdf_resolution);
    report.median_error_km = median(errors);
    report.mean_error_km = std::accumulate(errors.begin(), errors.end(), 0.0) /
                           static_cast<double>(errors.size());
  }
  return report;
}

}  // namespace hometown
