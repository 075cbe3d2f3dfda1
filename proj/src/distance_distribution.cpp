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

#include "hometown/distance_distribution.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

std::string_view to_string(FitMethod method) {
  switch (method) {
    case FitMethod::kMaximumLikelihood: return "mle";
    case FitMethod::kLogBinnedLeastSquares: return "log_binned_lsq";
  }
  return "unknown";
}

std::string_view to_string(BinScale scale) {
  return scale == BinScale::kLog ? "log" : "linear";
}

std::vector<double> distances_from_home(std::span<const PhotoRecord> photos,
                                        const GeoPoint& home) {
  std::vector<double> out;
  out.reserve(photos.size());
  for (const PhotoRecord& photo : photos) {
    out.push_back(haversine_km(photo.location, home));
  }
  return out;
}

namespace {

struct Tail {
  std::size_t n = 0;
  std::size_t n_above = 0;
  double log_sum = 0.0;
};

Tail collect_tail(std::span<const double> samples, double x_min_km) {
  if (!std::isfinite(x_min_km) || x_min_km <= 0.0) {
    throw Error(ErrorKind::kNonPositiveCutoff,
                fmt::format("x_min must be positive, got {}", x_min_km));
  }
  Tail tail;
  for (double x : samples) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite sample");
    }
    if (x < x_min_km) continue;
    ++tail.n;
    if (x > x_min_km) ++tail.n_above;
    tail.log_sum += std::log(x / x_min_km);
  }
  if (tail.n_above < 2) {
    throw Error(ErrorKind::kInsufficientTail,
                fmt::format("{} samples above x_min = {}, need 2",
                            tail.n_above, x_min_km));
  }
  return tail;
}

double pareto_log_likelihood(const Tail& tail, double exponent,
                             double x_min_km) {
  const auto n = static_cast<double>(tail.n);
  return n * std::log(exponent - 1.0) - n * std::log(x_min_km) -
         exponent * tail.log_sum;
}

}  // namespace

PowerLawFit fit_power_law_mle(std::span<const double> samples,
                              double x_min_km) {
  const Tail tail = collect_tail(samples, x_min_km);
  PowerLawFit fit;
  fit.exponent = 1.0 + static_cast<double>(tail.n) / tail.log_sum;
  fit.x_min_km = x_min_km;
  fit.n_tail = tail.n;
  fit.log_likelihood = pareto_log_likelihood(tail, fit.exponent, x_min_km);
  fit.method = FitMethod::kMaximumLikelihood;
  return fit;
}

PowerLawFit fit_power_law_log_binned(std::span<const double> samples,
                                     double x_min_km, std::size_t bins) {
  const Tail tail = collect_tail(samples, x_min_km);
  if (bins < 2) {
    throw Error(ErrorKind::kInvalidArgument, "log-binned fit needs >= 2 bins");
  }
  std::vector<double> in_tail;
  in_tail.reserve(tail.n);
  for (double x : samples) {
    if (x >= x_min_km) in_tail.push_back(x);
  }
  const HistogramSeries h = histogram(in_tail, bins, BinScale::kLog);

  // Ordinary least squares on (ln center, ln density) over non-empty bins.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.counts[b] == 0) continue;
    const double x = 0.5 * (std::log(h.bin_edges[b]) + std::log(h.bin_edges[b + 1]));
    const double y = std::log(h.densities[b]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const auto md = static_cast<double>(m);
  const double denom = md * sxx - sx * sx;
  if (m < 2 || denom <= 0.0) {
    throw Error(ErrorKind::kInsufficientTail,
                "log-binned fit needs two non-empty bins");
  }
  const double slope = (md * sxy - sx * sy) / denom;

  PowerLawFit fit;
  fit.exponent = -slope;
  fit.x_min_km = x_min_km;
  fit.n_tail = tail.n;
  fit.log_likelihood = fit.exponent > 1.0
                           ? pareto_log_likelihood(tail, fit.exponent, x_min_km)
                           : -INFINITY;
  fit.method = FitMethod::kLogBinnedLeastSquares;
  return fit;
}

PowerLawFit fit_power_law(std::span<const double> samples, double x_min_km,
                          FitMethod method, std::size_t bins) {
  if (method == FitMethod::kLogBinnedLeastSquares) {
    return fit_power_law_log_binned(samples, x_min_km, bins);
  }
  return fit_power_law_mle(samples, x_min_km);
}

HistogramSeries histogram(std::span<const double> samples, std::size_t bins,
                          BinScale scale) {
  if (samples.empty()) {
    throw Error(ErrorKind::kEmptySamples, "histogram of no samples");
  }
  if (bins < 1) {
    throw Error(ErrorKind::kInvalidArgument, "histogram needs >= 1 bin");
  }
  for (double x : samples) {
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("invalid sample {}", x));
    }
    if (scale == BinScale::kLog && x <= 0.0) {
      throw Error(ErrorKind::kNonPositiveSampleInLogScale,
                  "log-scale histogram needs strictly positive samples");
    }
  }
  const auto [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *min_it;
  double hi = *max_it;
  if (lo == hi) hi = scale == BinScale::kLog ? lo * 10.0 : lo + 1.0;

  HistogramSeries h;
  h.scale = scale;
  h.bin_edges.resize(bins + 1);
  const auto nb = static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b) {
    const double t = static_cast<double>(b) / nb;
    h.bin_edges[b] = scale == BinScale::kLog
                         ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                         : lo + t * (hi - lo);
  }
  h.bin_edges.front() = lo;
  h.bin_edges.back() = hi;

  h.counts.assign(bins, 0);
  for (double x : samples) {
    auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), x);
    auto b = static_cast<std::size_t>(it - h.bin_edges.begin());
    b = std::clamp<std::size_t>(b, 1, bins) - 1;
    ++h.counts[b];
  }
  const auto total = static_cast<double>(samples.size());
  h.densities.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double width = h.bin_edges[b + 1] - h.bin_edges[b];
    h.densities[b] = static_cast<double>(h.counts[b]) / (total * width);
  }
  return h;
}

}  // namespace hometown
