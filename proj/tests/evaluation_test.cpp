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
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hometown/error.hpp"
#include "test_support.hpp"

namespace hometown {
namespace {

UserDataset user_with(const std::string& id, const std::vector<GeoPoint>& points,
                      std::optional<GeoPoint> home) {
  std::vector<PhotoRecord> photos;
  for (std::size_t i = 0; i < points.size(); ++i) {
    photos.emplace_back(id + "_" + std::to_string(i), id, points[i]);
  }
  return UserDataset(id, std::move(photos), home);
}

const std::vector<double> kThresholds = {10, 25, 50, 100, 500};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIo;
}

TEST(ErrorCdfTest, Examples) {
  const std::vector<double> zeros(5, 0.0);
  for (const CdfPoint& p : error_cdf(zeros, 4)) EXPECT_EQ(p.fraction, 1.0);
  const std::vector<double> errors = {4, 1, 3, 2};
  std::vector<double> sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(empirical_cdf_at(sorted, 2.5), 0.5);
  EXPECT_EQ(empirical_cdf_at(sorted, 2.0), 0.5);  // right-continuous
  EXPECT_EQ(empirical_cdf_at(sorted, 0.5), 0.0);
  const auto cdf = error_cdf(errors, 5);
  ASSERT_EQ(cdf.size(), 5u);
  EXPECT_EQ(cdf.front().km, 0.0);
  EXPECT_EQ(cdf.back().km, 4.0);
  EXPECT_EQ(cdf.back().fraction, 1.0);
  EXPECT_EQ(cdf[2].km, 2.0);
  EXPECT_EQ(cdf[2].fraction, 0.5);
}

TEST(ErrorCdfTest, Errors) {
  EXPECT_EQ(kind_of([] { error_cdf(std::vector<double>{}, 3); }), ErrorKind::kEmptyErrors);
  EXPECT_EQ(kind_of([] { error_cdf(std::vector<double>{1}, 1); }), ErrorKind::kInvalidArgument);
}

TEST(ErrorCdfTest, MatchesNaiveCountAndIsMonotoneProperty) {
  testing::Gen gen(83);
  for (int c = 0; c < testing::kPropertyCases; ++c) {
    std::vector<double> errors;
    const std::size_t n = gen.index(1, 50);
    for (std::size_t i = 0; i < n; ++i) {
      // Some repeated values exercise the step convention.
      errors.push_back(c % 3 == 0 ? static_cast<double>(gen.index(0, 5)) : gen.uniform(0, 1000));
    }
    const auto cdf = error_cdf(errors, gen.index(2, 40));
    double prev = 0.0;
    for (const CdfPoint& p : cdf) {
      const double naive =
          static_cast<double>(std::count_if(errors.begin(), errors.end(),
                                            [&](double e) { return e <= p.km; })) /
          static_cast<double>(errors.size());
      EXPECT_EQ(p.fraction, naive) << "case " << c;
      EXPECT_GE(p.fraction, prev);
      EXPECT_GE(p.fraction, 0.0);
      EXPECT_LE(p.fraction, 1.0);
      prev = p.fraction;
    }
    EXPECT_EQ(cdf.back().fraction, 1.0);
  }
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(median(std::vector<double>{5, 1, 3}), 3.0);
  EXPECT_EQ(median(std::vector<double>{4, 1, 3, 2}), 2.5);
}

TEST(EvaluateCohortTest, AtHomeUser) {
  const GeoPoint home(52.52, 13.405);
  const std::vector<UserDataset> users = {
      user_with("alice", std::vector<GeoPoint>(12, home), home)};
  const EvalReport r = evaluate_cohort(users, PredictorConfig{FixedK{1}, 10}, kThresholds);
  ASSERT_EQ(r.per_user.size(), 1u);
  EXPECT_EQ(r.per_user[0].error_km, 0.0);
  EXPECT_EQ(r.per_user[0].n_photos, 12u);
  EXPECT_EQ(r.per_user[0].chosen_cluster_size, 12u);
  ASSERT_EQ(r.fraction_within.size(), kThresholds.size());
  for (const ThresholdFraction& t : r.fraction_within) EXPECT_EQ(t.fraction, 1.0);
  EXPECT_EQ(r.n_failed(), 0u);
  EXPECT_EQ(r.median_error_km, 0.0);
}

TEST(EvaluateCohortTest, AdversarialTraveller) {
  const GeoPoint home(0, 0);
  // Reported home at (0,0) with 3 photos there, but 8 photos at a spot
  // ~5000 km east, so the densest cluster is the trip.
  const GeoPoint trip = geodesic_destination(home, 90.0, 5000.0);
  std::vector<GeoPoint> traveller(3, home);
  for (int i = 0; i < 8; ++i) traveller.push_back(trip);
  const std::vector<UserDataset> users = {
      user_with("a_home", std::vector<GeoPoint>(11, home), home),
      user_with("b_trip", traveller, home)};
  const EvalReport r = evaluate_cohort(users, PredictorConfig{FixedK{2}, 10}, kThresholds);
  ASSERT_EQ(r.per_user.size(), 2u);
  EXPECT_EQ(r.per_user[0].error_km, 0.0);
  EXPECT_NEAR(r.per_user[1].error_km, 5000.0, 1e-6);
  EXPECT_EQ(r.per_user[1].chosen_cluster_size, 8u);
  for (const ThresholdFraction& t : r.fraction_within) EXPECT_EQ(t.fraction, 0.5);
}

TEST(EvaluateCohortTest, FailuresAreReportedAndConserved) {
  const GeoPoint home(10, 10);
  const std::vector<UserDataset> users = {
      user_with("c_ok", std::vector<GeoPoint>(10, home), home),
      user_with("a_nohome", std::vector<GeoPoint>(10, home), std::nullopt),
      user_with("b_few", std::vector<GeoPoint>(3, home), home)};
  const EvalReport r = evaluate_cohort(users, PredictorConfig{FixedK{2}, 10}, kThresholds);
  EXPECT_EQ(r.per_user.size() + r.n_failed(), users.size());
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].user_id, "a_nohome");
  EXPECT_EQ(r.failures[0].reason, "no reported home");
  EXPECT_EQ(r.failures[1].user_id, "b_few");
  EXPECT_NE(r.failures[1].reason.find("TooFewPhotos"), std::string::npos);
  ASSERT_EQ(r.per_user.size(), 1u);
  EXPECT_EQ(r.per_user[0].user_id, "c_ok");
}

TEST(EvaluateCohortTest, AllFailedLeavesEmptyCdf) {
  const GeoPoint home(10, 10);
  const std::vector<UserDataset> users = {user_with("x", {home}, home)};
  const EvalReport r = evaluate_cohort(users, PredictorConfig{}, kThresholds);
  EXPECT_TRUE(r.per_user.empty());
  EXPECT_TRUE(r.cdf.empty());
  EXPECT_FALSE(r.median_error_km.has_value());
  for (const ThresholdFraction& t : r.fraction_within) EXPECT_EQ(t.fraction, 0.0);
}

TEST(EvaluateCohortTest, Errors) {
  const GeoPoint home(10, 10);
  const std::vector<UserDataset> none;
  EXPECT_EQ(kind_of([&] { evaluate_cohort(none, PredictorConfig{}, kThresholds); }),
            ErrorKind::kEmptyCohort);
  const std::vector<UserDataset> no_truth = {
      user_with("x", std::vector<GeoPoint>(10, home), std::nullopt)};
  EXPECT_EQ(kind_of([&] { evaluate_cohort(no_truth, PredictorConfig{}, kThresholds); }),
            ErrorKind::kNoGroundTruth);
  const std::vector<UserDataset> ok = {user_with("x", std::vector<GeoPoint>(10, home), home)};
  for (const std::vector<double>& bad : std::vector<std::vector<double>>{
           {10, 10}, {25, 10}, {0, 10}, {-5}}) {
    EXPECT_EQ(kind_of([&] { evaluate_cohort(ok, PredictorConfig{}, bad); }),
              ErrorKind::kInvalidThreshold);
  }
}

TEST(EvaluateCohortTest, Deterministic) {
  testing::Gen gen(89);
  std::vector<UserDataset> users;
  for (int u = 0; u < 8; ++u) {
    const GeoPoint home(gen.uniform(-50, 50), gen.uniform(-170, 170));
    std::vector<GeoPoint> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(gen.near(home, 0.3));
    for (int i = 0; i < 6; ++i) pts.push_back(gen.point());
    users.push_back(user_with("u" + std::to_string(u), pts, home));
  }
  const EvalReport a = evaluate_cohort(users, PredictorConfig{}, kThresholds);
  const EvalReport b = evaluate_cohort(users, PredictorConfig{}, kThresholds);
  ASSERT_EQ(a.per_user.size(), b.per_user.size());
  for (std::size_t i = 0; i < a.per_user.size(); ++i) {
    EXPECT_EQ(a.per_user[i].error_km, b.per_user[i].error_km);
    EXPECT_EQ(a.per_user[i].predicted_home, b.per_user[i].predicted_home);
  }
  EXPECT_EQ(a.median_error_km, b.median_error_km);
}

}  // namespace
}  // namespace hometown
