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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hometown/distance_distribution.hpp"
#include "hometown/evaluation.hpp"
#include "hometown/predictor.hpp"

// JSON report schema (schema_version 1). Every report is one object with
// `schema_version`, `command`, the echoed `config`, and a command-specific
// payload. Coordinates are rounded to 6 decimals, distances to 3.

namespace hometown {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

double round_to(double value, int decimals);

Json to_json(const GeoPoint& p);
Json to_json(const PredictorConfig& config);
Json to_json(const PowerLawFit& fit);
Json to_json(const HistogramSeries& h);

/// Runs the predictor for every user and reports predictions and failures.
Json predict_report(std::span<const UserDataset> users,
                    const PredictorConfig& config);

Json eval_report(const EvalReport& report, const PredictorConfig& config,
                 std::span<const double> thresholds_km,
                 std::size_t cdf_resolution);

/// Clusters every user's photos and reports the full partition.
Json cluster_report(std::span<const UserDataset> users, const ClusteringRule& rule);

struct FitSettings {
  double x_min_km = 1.0;
  std::size_t bins = 30;
  BinScale scale = BinScale::kLinear;
  FitMethod method = FitMethod::kMaximumLikelihood;
};

/// Pools every photo's distance to its owner's reported home, fits the tail
/// and exports a histogram. Users without a home are listed, not used.
Json fit_report(std::span<const UserDataset> users, const FitSettings& settings);

/// Pretty-printed with a trailing newline; the byte-level form compared by
/// tests.
std::string dump(const Json& report);

/// `user_id,error_km,n_photos,chosen_cluster_size,pred_lat,pred_lon`.
void write_per_user_csv(std::ostream& out, const EvalReport& report);

}  // namespace hometown
