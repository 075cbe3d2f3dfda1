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
#include <span>
#include <vector>

#include "hometown/geo.hpp"

namespace hometown {

/// Largest point count accepted by the complete-graph builders. At the cap
/// the edge list already holds ~1.25e9 entries.
inline constexpr std::size_t kDefaultMaxPoints = 50'000;

/// An undirected edge of the complete geodesic graph, stored with i < j.
struct Edge {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double weight_km = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Total order on edges: (weight_km, i, j) ascending.
bool edge_less(const Edge& a, const Edge& b) noexcept;

/// Union-find with union by rank and full path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  std::size_t find(std::size_t x);
  /// Merges the sets of `a` and `b`; returns false if they were already one.
  bool unite(std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t component_count() const noexcept { return components_; }
  std::size_t parent(std::size_t x) const { return parent_.at(x); }
  std::size_t rank(std::size_t x) const { return rank_.at(x); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::size_t components_;
};

struct ClusterStats {
  std::size_t size = 0;
  std::vector<std::size_t> member_indices;  // ascending
  GeoPoint centroid;
  double diameter_km = 0.0;  // max pairwise member distance
};

/// A partition of point indices obtained by deleting `cut_edges` from an MST.
/// Cluster ids run 0..c-1 ordered by descending size, then ascending centroid
/// (lat, lon), then smallest member index.
struct ClusterSet {
  std::vector<std::size_t> assignment;  // point index -> cluster id
  std::vector<ClusterStats> clusters;
  std::vector<Edge> cut_edges;  // heaviest first
};

/// All n(n-1)/2 edges sorted by edge_less. Throws Error(kInputTooLarge) above
/// `max_points` and Error(kInvalidArgument) for an empty input.
std::vector<Edge> build_complete_edge_list(
    std::span<const GeoPoint> points, std::size_t max_points = kDefaultMaxPoints);

/// Kruskal's algorithm on the complete geodesic graph. Returns the n-1 tree
/// edges in the order they were accepted (ascending by edge_less), so the
/// result is unique even with tied weights.
std::vector<Edge> kruskal_mst(std::span<const GeoPoint> points,
                              std::size_t max_points = kDefaultMaxPoints);

/// Deletes the k-1 heaviest MST edges. Throws Error(kInvalidK) unless
/// 1 <= k <= n, and Error(kInvalidArgument) if `mst` is not a spanning tree of
/// `points`.
ClusterSet cut_into_k_clusters(std::span<const GeoPoint> points,
                               std::span<const Edge> mst, std::size_t k);

/// Deletes every MST edge heavier than `d_max_km`; single-linkage clustering
/// at that distance. Throws Error(kInvalidThreshold) for non-positive or
/// non-finite thresholds.
ClusterSet cut_by_threshold(std::span<const GeoPoint> points,
                            std::span<const Edge> mst, double d_max_km);

}  // namespace hometown
