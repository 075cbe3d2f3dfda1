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

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hometown/error.hpp"
#include "test_support.hpp"

namespace hometown {
namespace {

std::vector<PhotoRecord> photos_at(const std::vector<GeoPoint>& points,
                                   const std::string& owner = "u") {
  std::vector<PhotoRecord> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.emplace_back("p" + std::to_string(i), owner, points[i]);
  }
  return out;
}

PredictorConfig fixed_k(std::size_t k, std::size_t min_photos = 1) {
  return PredictorConfig{FixedK{k}, min_photos};
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIo;
}

TEST(PredictorTest, AllPhotosAtOnePoint) {
  const GeoPoint eiffel(48.8584, 2.2945);
  const auto photos = photos_at(std::vector<GeoPoint>(10, eiffel));
  const PredictionResult r = predict_hometown(photos, fixed_k(1, 10), eiffel);
  EXPECT_EQ(r.predicted_home, eiffel);
  ASSERT_TRUE(r.error_km.has_value());
  EXPECT_EQ(*r.error_km, 0.0);
  EXPECT_EQ(r.chosen_cluster().size, 10u);
}

TEST(PredictorTest, DensestClusterWins) {
  // Five photos within 1 km of (0,0), two within 1 km of (40,40).
  const std::vector<GeoPoint> pts = {{0.001, 0.002}, {-0.003, 0.001}, {0.002, -0.004},
                                     {0.0, 0.0},     {-0.002, -0.001}, {40.002, 40.001},
                                     {39.998, 40.003}};
  for (std::size_t i = 0; i < 5; ++i) ASSERT_LT(haversine_km(pts[i], {0, 0}), 1.0);
  for (std::size_t i = 5; i < 7; ++i) ASSERT_LT(haversine_km(pts[i], {40, 40}), 1.0);
  ASSERT_GT(haversine_km(pts[0], pts[5]), 5000.0);

  const PredictionResult r = predict_hometown(photos_at(pts), fixed_k(2, 5), GeoPoint(0, 0));
  EXPECT_EQ(r.chosen_cluster().member_indices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_LT(*r.error_km, 1.0);
  EXPECT_EQ(r.predicted_home, r.chosen_cluster().centroid);
}

TEST(PredictorTest, NoTruthMeansNoError) {
  const auto photos = photos_at({{1, 1}, {1, 1.001}});
  EXPECT_FALSE(predict_hometown(photos, fixed_k(1)).error_km.has_value());
}

TEST(PredictorTest, ThresholdMode) {
  const std::vector<GeoPoint> pts = {{10, 10}, {10.01, 10}, {10, 10.01}, {-30, 120}};
  const PredictionResult r =
      predict_hometown(photos_at(pts), PredictorConfig{DistanceThreshold{5.0}, 1});
  EXPECT_EQ(r.cluster_set.clusters.size(), 2u);
  EXPECT_EQ(r.chosen_cluster().size, 3u);
}

TEST(PredictorTest, TieBreakPrefersSmallerDiameter) {
  // Two pairs, far apart; the second pair is tighter.
  const std::vector<GeoPoint> pts = {{0, 0}, {0, 0.05}, {30, 30}, {30, 30.01}};
  const PredictionResult r = predict_hometown(photos_at(pts), fixed_k(2));
  EXPECT_EQ(r.chosen_cluster().member_indices, (std::vector<std::size_t>{2, 3}));
}

TEST(PredictorTest, TieBreakFallsBackToCentroidOrder) {
  // Mirror images across the equator have bit-identical diameters.
  const std::vector<GeoPoint> pts = {{10, 5}, {10, 5.01}, {-10, 5}, {-10, 5.01}};
  const PredictionResult r = predict_hometown(photos_at(pts), fixed_k(2));
  ASSERT_EQ(r.cluster_set.clusters[0].diameter_km, r.cluster_set.clusters[1].diameter_km);
  EXPECT_EQ(r.chosen_cluster().member_indices, (std::vector<std::size_t>{2, 3}));
}

TEST(PredictorTest, Errors) {
  const auto photos = photos_at({{0, 0}, {1, 1}, {2, 2}});
  EXPECT_EQ(kind_of([&] { predict_hometown(photos, fixed_k(1, 4)); }), ErrorKind::kTooFewPhotos);
  EXPECT_EQ(kind_of([&] { predict_hometown(photos, fixed_k(4, 1)); }), ErrorKind::kTooFewPhotos);
  EXPECT_EQ(kind_of([&] { predict_hometown(photos, fixed_k(0, 1)); }), ErrorKind::kInvalidK);
  EXPECT_EQ(kind_of([&] { predict_hometown(photos, fixed_k(1, 0)); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([&] {
              predict_hometown(photos, PredictorConfig{DistanceThreshold{-1}, 1});
            }),
            ErrorKind::kInvalidThreshold);
  const auto antipodal = photos_at({{0, 0}, {0, 180}});
  EXPECT_EQ(kind_of([&] { predict_hometown(antipodal, fixed_k(1)); }),
            ErrorKind::kDegenerateCentroid);
}

std::vector<GeoPoint> random_user(testing::Gen& gen) {
  const GeoPoint home(gen.uniform(-50, 50), gen.uniform(-170, 170));
  std::vector<GeoPoint> pts;
  const std::size_t n_home = gen.index(8, 30);
  for (std::size_t i = 0; i < n_home; ++i) pts.push_back(gen.near(home, 0.2));
  const std::size_t n_away = gen.index(0, 12);
  for (std::size_t i = 0; i < n_away; ++i) pts.push_back(gen.point());
  return pts;
}

TEST(PredictorPropertyTest, PermutationInvariance) {
  testing::Gen gen(61);
  for (int c = 0; c < 200; ++c) {
    auto photos = photos_at(random_user(gen));
    const auto config = fixed_k(gen.index(1, 5));
    const GeoPoint before = predict_hometown(photos, config).predicted_home;
    std::shuffle(photos.begin(), photos.end(), gen.engine());
    EXPECT_EQ(predict_hometown(photos, config).predicted_home, before) << "case " << c;
  }
}

TEST(PredictorPropertyTest, DuplicatingADensestPhotoKeepsTheCluster) {
  testing::Gen gen(67);
  for (int c = 0; c < 200; ++c) {
    auto photos = photos_at(random_user(gen));
    const auto config = fixed_k(gen.index(1, 5));
    const PredictionResult before = predict_hometown(photos, config);
    const std::size_t member = before.chosen_cluster().member_indices.front();
    photos.emplace_back("dup", "u", photos[member].location);
    const PredictionResult after = predict_hometown(photos, config);
    EXPECT_GE(after.chosen_cluster().size, before.chosen_cluster().size);
    EXPECT_EQ(after.cluster_set.assignment.back(),
              after.cluster_set.assignment[member]);
    EXPECT_EQ(after.chosen_cluster_id, after.cluster_set.assignment[member]) << "case " << c;
  }
}

TEST(PredictorPropertyTest, KOneIsGlobalCentroid) {
  testing::Gen gen(71);
  for (int c = 0; c < 200; ++c) {
    const auto pts = random_user(gen);
    EXPECT_EQ(predict_hometown(photos_at(pts), fixed_k(1)).predicted_home,
              spherical_centroid(pts));
  }
}

TEST(PredictorPropertyTest, ChosenClusterIsMaximalAndDeterministic) {
  testing::Gen gen(73);
  for (int c = 0; c < 200; ++c) {
    const auto photos = photos_at(random_user(gen));
    const auto config = c % 2 ? fixed_k(gen.index(1, 6))
                              : PredictorConfig{DistanceThreshold{gen.uniform(5, 3000)}, 1};
    const PredictionResult a = predict_hometown(photos, config);
    for (const ClusterStats& cl : a.cluster_set.clusters) {
      EXPECT_GE(a.chosen_cluster().size, cl.size);
    }
    EXPECT_EQ(a.predicted_home, a.chosen_cluster().centroid);
    const PredictionResult b = predict_hometown(photos, config);
    EXPECT_EQ(a.predicted_home, b.predicted_home);
    EXPECT_EQ(a.chosen_cluster_id, b.chosen_cluster_id);
    EXPECT_EQ(a.cluster_set.assignment, b.cluster_set.assignment);
  }
}

}  // namespace
}  // namespace hometown
