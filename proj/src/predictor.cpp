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

#include "hometown/predictor.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void PredictorConfig::validate() const {
  if (min_photos < 1) {
    throw Error(ErrorKind::kInvalidArgument, "min_photos must be at least 1");
  }
  std::visit(Overloaded{
                 [](const FixedK& r) {
                   if (r.k < 1) {
                     throw Error(ErrorKind::kInvalidK, "k must be at least 1");
                   }
                 },
                 [](const DistanceThreshold& r) {
                   if (!std::isfinite(r.d_max_km) || r.d_max_km <= 0.0) {
                     throw Error(ErrorKind::kInvalidThreshold,
                                 fmt::format("threshold must be positive, got {}",
                                             r.d_max_km));
                   }
                 },
             },
             rule);
}

ClusterSet cluster_points(std::span<const GeoPoint> points,
                          const ClusteringRule& rule) {
  const std::vector<Edge> mst = kruskal_mst(points);
  return std::visit(Overloaded{
                        [&](const FixedK& r) {
                          return cut_into_k_clusters(points, mst, r.k);
                        },
                        [&](const DistanceThreshold& r) {
                          return cut_by_threshold(points, mst, r.d_max_km);
                        },
                    },
                    rule);
}

std::size_t densest_cluster(const ClusterSet& clusters) {
  if (clusters.clusters.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no clusters to choose from");
  }
  std::size_t best = 0;
  for (std::size_t id = 1; id < clusters.clusters.size(); ++id) {
    const ClusterStats& c = clusters.clusters[id];
    const ClusterStats& b = clusters.clusters[best];
    if (c.size != b.size) {
      if (c.size > b.size) best = id;
    } else if (c.diameter_km != b.diameter_km) {
      if (c.diameter_km < b.diameter_km) best = id;
    } else if (lat_lon_less(c.centroid, b.centroid)) {
      best = id;
    }
  }
  return best;
}

PredictionResult predict_hometown(std::span<const PhotoRecord> photos,
                                  const PredictorConfig& config,
                                  std::optional<GeoPoint> truth) {
  config.validate();
  if (photos.size() < config.min_photos) {
    throw Error(ErrorKind::kTooFewPhotos,
                fmt::format("{} photos, at least {} required", photos.size(),
                            config.min_photos));
  }
  if (const auto* fixed = std::get_if<FixedK>(&config.rule);
      fixed && photos.size() < fixed->k) {
    throw Error(ErrorKind::kTooFewPhotos,
                fmt::format("{} photos cannot form k = {} clusters",
                            photos.size(), fixed->k));
  }

  std::vector<GeoPoint> points;
  points.reserve(photos.size());
  for (const PhotoRecord& photo : photos) points.push_back(photo.location);

  PredictionResult result;
  result.cluster_set = cluster_points(points, config.rule);
  result.chosen_cluster_id = densest_cluster(result.cluster_set);
  result.predicted_home = result.chosen_cluster().centroid;
  if (truth) result.error_km = haversine_km(result.predicted_home, *truth);
  return result;
}

}  // namespace hometown
