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

#include "hometown/mst_clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

bool edge_less(const Edge& a, const Edge& b) noexcept {
  return std::tie(a.weight_km, a.i, a.j) < std::tie(b.weight_km, b.i, b.j);
}

DisjointSet::DisjointSet(std::size_t n)
    : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  std::size_t ra = find(a);
  std::size_t rb = find(b);
  if (ra == rb) return false;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  --components_;
  return true;
}

std::vector<Edge> build_complete_edge_list(std::span<const GeoPoint> points,
                                           std::size_t max_points) {
  const std::size_t n = points.size();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "edge list of an empty point set");
  }
  if (n > max_points) {
    throw Error(ErrorKind::kInputTooLarge,
                fmt::format("{} points exceed the cap of {}", n, max_points));
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j),
                       haversine_km(points[i], points[j])});
    }
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  return edges;
}

std::vector<Edge> kruskal_mst(std::span<const GeoPoint> points,
                              std::size_t max_points) {
  const std::vector<Edge> edges = build_complete_edge_list(points, max_points);
  const std::size_t n = points.size();
  DisjointSet forest(n);
  std::vector<Edge> tree;
  tree.reserve(n - 1);
  for (const Edge& e : edges) {
    if (forest.unite(e.i, e.j)) {
      tree.push_back(e);
      if (tree.size() == n - 1) break;
    }
  }
  return tree;
}

namespace {

double cluster_diameter(std::span<const GeoPoint> points,
                        const std::vector<std::size_t>& members) {
  double diameter = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      diameter = std::max(
          diameter, haversine_km(points[members[a]], points[members[b]]));
    }
  }
  return diameter;
}

// `by_weight` is the tree sorted heaviest first; its first `n_cut` edges are
// removed and the remaining components numbered.
ClusterSet assemble(std::span<const GeoPoint> points,
                    std::vector<Edge> by_weight, std::size_t n_cut) {
  const std::size_t n = points.size();
  const auto split = by_weight.begin() + static_cast<std::ptrdiff_t>(n_cut);
  std::vector<Edge> cut_edges(by_weight.begin(), split);
  std::vector<Edge> kept(split, by_weight.end());
  DisjointSet forest(n);
  for (const Edge& e : kept) forest.unite(e.i, e.j);

  std::vector<std::size_t> root_to_slot(n, n);
  std::vector<ClusterStats> clusters;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t root = forest.find(p);
    if (root_to_slot[root] == n) {
      root_to_slot[root] = clusters.size();
      clusters.emplace_back();
    }
    clusters[root_to_slot[root]].member_indices.push_back(p);
  }

  std::vector<GeoPoint> scratch;
  for (ClusterStats& c : clusters) {
    c.size = c.member_indices.size();
    scratch.clear();
    for (std::size_t idx : c.member_indices) scratch.push_back(points[idx]);
    c.centroid = spherical_centroid(scratch);
    c.diameter_km = cluster_diameter(points, c.member_indices);
  }

  std::sort(clusters.begin(), clusters.end(),
            [](const ClusterStats& a, const ClusterStats& b) {
              if (a.size != b.size) return a.size > b.size;
              if (a.centroid != b.centroid) {
                return lat_lon_less(a.centroid, b.centroid);
              }
              return a.member_indices.front() < b.member_indices.front();
            });

  ClusterSet out;
  out.assignment.assign(n, 0);
  for (std::size_t id = 0; id < clusters.size(); ++id) {
    for (std::size_t idx : clusters[id].member_indices) out.assignment[idx] = id;
  }
  out.clusters = std::move(clusters);
  out.cut_edges = std::move(cut_edges);
  return out;
}

void check_spanning_tree(std::span<const GeoPoint> points,
                         std::span<const Edge> mst) {
  const std::size_t n = points.size();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "clustering an empty point set");
  }
  if (mst.size() != n - 1) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("expected {} tree edges, got {}", n - 1, mst.size()));
  }
  DisjointSet forest(n);
  for (const Edge& e : mst) {
    if (e.i >= e.j || e.j >= n || !forest.unite(e.i, e.j)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("edge ({}, {}) does not belong to a spanning tree",
                              e.i, e.j));
    }
  }
}

std::vector<Edge> heaviest_first(std::span<const Edge> mst) {
  std::vector<Edge> sorted(mst.begin(), mst.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return edge_less(b, a); });
  return sorted;
}

}  // namespace

ClusterSet cut_into_k_clusters(std::span<const GeoPoint> points,
                               std::span<const Edge> mst, std::size_t k) {
  if (k < 1 || k > points.size()) {
    throw Error(ErrorKind::kInvalidK,
                fmt::format("k = {} outside [1, {}]", k, points.size()));
  }
  check_spanning_tree(points, mst);
  return assemble(points, heaviest_first(mst), k - 1);
}

ClusterSet cut_by_threshold(std::span<const GeoPoint> points,
                            std::span<const Edge> mst, double d_max_km) {
  if (!std::isfinite(d_max_km) || d_max_km <= 0.0) {
    throw Error(ErrorKind::kInvalidThreshold,
                fmt::format("threshold must be positive and finite, got {}",
                            d_max_km));
  }
  check_spanning_tree(points, mst);
  std::vector<Edge> sorted = heaviest_first(mst);
  const auto n_cut = static_cast<std::size_t>(
      std::count_if(sorted.begin(), sorted.end(),
                    [&](const Edge& e) { return e.weight_km > d_max_km; }));
  return assemble(points, std::move(sorted), n_cut);
}

}  // namespace hometown
