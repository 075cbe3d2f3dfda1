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
#include <span>
#include <string_view>
#include <vector>

#include "hometown/geo.hpp"
#include "hometown/photo.hpp"

namespace hometown {

enum class FitMethod {
  kMaximumLikelihood,      // continuous Hill-style estimator
  kLogBinnedLeastSquares,  // regression of log density on log distance
};

std::string_view to_string(FitMethod method);

/// Tail fit of density ∝ d^(-exponent) for d >= x_min_km. The exponent is
/// stored positive.
struct PowerLawFit {
  double exponent = 0.0;
  double x_min_km = 0.0;
  std::size_t n_tail = 0;       // samples >= x_min_km
  double log_likelihood = 0.0;  // continuous Pareto log-likelihood at exponent
  FitMethod method = FitMethod::kMaximumLikelihood;
};

enum class BinScale { kLinear, kLog };

std::string_view to_string(BinScale scale);

/// Density-normalized histogram: sum(density * width) == 1.
struct HistogramSeries {
  std::vector<double> bin_edges;
  std::vector<double> densities;
  std::vector<std::size_t> counts;
  BinScale scale = BinScale::kLinear;
};

/// Great-circle distance from each photo to `home`, in input order.
std::vector<double> distances_from_home(std::span<const PhotoRecord> photos,
                                        const GeoPoint& home);

/// exponent = 1 + n_tail / sum(ln(x / x_min)) over samples >= x_min.
/// Throws Error(kNonPositiveCutoff) for x_min <= 0 and
/// Error(kInsufficientTail) when fewer than two samples exceed x_min.
PowerLawFit fit_power_law_mle(std::span<const double> samples, double x_min_km);

/// Least-squares slope of log density against log bin center, using `bins`
/// log-spaced bins over [x_min, max]. Needs two non-empty bins.
PowerLawFit fit_power_law_log_binned(std::span<const double> samples,
                                     double x_min_km, std::size_t bins);

PowerLawFit fit_power_law(std::span<const double> samples, double x_min_km,
                          FitMethod method, std::size_t bins = 30);

/// Edges span [min, max] of the samples, log-spaced for BinScale::kLog. When
/// every sample is equal the single span is widened to [v, v + 1] (linear) or
/// [v, 10 v] (log). Throws Error(kEmptySamples),
/// Error(kNonPositiveSampleInLogScale), or Error(kInvalidArgument) for zero
/// bins and negative or non-finite samples.
HistogramSeries histogram(std::span<const double> samples, std::size_t bins,
                          BinScale scale);

}  // namespace hometown
