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
#include <optional>
#include <span>
#include <variant>

#include "hometown/geo.hpp"
#include "hometown/mst_clustering.hpp"
#include "hometown/photo.hpp"

namespace hometown {

/// Cut the MST into exactly k clusters.
struct FixedK {
  std::size_t k = 5;
};

/// Cut every MST edge longer than d_max_km.
struct DistanceThreshold {
  double d_max_km = 50.0;
};

using ClusteringRule = std::variant<FixedK, DistanceThreshold>;

struct PredictorConfig {
  ClusteringRule rule = FixedK{};
  std::size_t min_photos = 10;

  /// Throws Error(kInvalidK), Error(kInvalidThreshold) or
  /// Error(kInvalidArgument) for an unusable configuration.
  void validate() const;
};

struct PredictionResult {
  GeoPoint predicted_home;
  std::size_t chosen_cluster_id = 0;
  ClusterSet cluster_set;
  std::optional<double> error_km;  // set iff ground truth was supplied

  const ClusterStats& chosen_cluster() const {
    return cluster_set.clusters.at(chosen_cluster_id);
  }
};

/// Applies `rule` to an MST of `points`.
ClusterSet cluster_points(std::span<const GeoPoint> points,
                          const ClusteringRule& rule);

/// Index of the most populous cluster. Ties go to the smaller diameter, then
/// to the lexicographically smaller (lat, lon) centroid.
std::size_t densest_cluster(const ClusterSet& clusters);

/// Clusters the photo locations, picks the densest cluster and returns its
/// spherical centroid as the home estimate. Timestamps are ignored.
/// Throws Error(kTooFewPhotos) when there are fewer photos than min_photos
/// (or than k in fixed-k mode); DegenerateCentroid propagates.
PredictionResult predict_hometown(std::span<const PhotoRecord> photos,
                                  const PredictorConfig& config,
                                  std::optional<GeoPoint> truth = std::nullopt);

}  // namespace hometown
