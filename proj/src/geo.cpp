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

#include "hometown/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegenerateNorm = 1e-9;

}  // namespace

double normalize_longitude(double lon_deg) {
  double shifted = std::fmod(lon_deg + 180.0, 360.0);
  if (shifted <= 0.0) shifted += 360.0;
  return shifted - 180.0;
}

GeoPoint::GeoPoint(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg)) {
    throw Error(ErrorKind::kInvalidCoordinate, "non-finite coordinate");
  }
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw Error(ErrorKind::kInvalidCoordinate,
                fmt::format("latitude out of range: {}", lat_deg));
  }
  lat_deg_ = lat_deg;
  lon_deg_ = std::abs(lat_deg) == 90.0 ? 0.0 : normalize_longitude(lon_deg);
}

bool lat_lon_less(const GeoPoint& a, const GeoPoint& b) noexcept {
  if (a.lat_deg() != b.lat_deg()) return a.lat_deg() < b.lat_deg();
  return a.lon_deg() < b.lon_deg();
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) noexcept {
  const double phi1 = a.lat_deg() * kDegToRad;
  const double phi2 = b.lat_deg() * kDegToRad;
  const double sin_dphi = std::sin((phi2 - phi1) / 2.0);
  const double sin_dlambda =
      std::sin((b.lon_deg() - a.lon_deg()) * kDegToRad / 2.0);
  double h = sin_dphi * sin_dphi +
             std::cos(phi1) * std::cos(phi2) * sin_dlambda * sin_dlambda;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

GeoPoint spherical_centroid(std::span<const GeoPoint> points) {
  if (points.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "centroid of an empty point set");
  }
  if (std::all_of(points.begin(), points.end(),
                  [&](const GeoPoint& p) { return p == points.front(); })) {
    return points.front();
  }

  // Summation order is fixed so the result does not depend on input order.
  std::vector<GeoPoint> ordered(points.begin(), points.end());
  std::sort(ordered.begin(), ordered.end(), lat_lon_less);

  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  for (const GeoPoint& p : ordered) {
    const double phi = p.lat_deg() * kDegToRad;
    const double lambda = p.lon_deg() * kDegToRad;
    x += std::cos(phi) * std::cos(lambda);
    y += std::cos(phi) * std::sin(lambda);
    z += std::sin(phi);
  }
  const auto n = static_cast<double>(points.size());
  x /= n;
  y /= n;
  z /= n;
  if (std::sqrt(x * x + y * y + z * z) < kDegenerateNorm) {
    throw Error(ErrorKind::kDegenerateCentroid,
                "mean unit vector vanishes; centroid is undefined");
  }
  const double lat = std::atan2(z, std::hypot(x, y)) * kRadToDeg;
  const double lon = std::atan2(y, x) * kRadToDeg;
  return GeoPoint(std::clamp(lat, -90.0, 90.0), lon);
}

GeoPoint geodesic_destination(const GeoPoint& origin, double bearing_deg,
                              double distance_km) {
  if (!(distance_km >= 0.0) || !std::isfinite(distance_km) ||
      !std::isfinite(bearing_deg)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("invalid displacement: bearing {}, distance {}",
                            bearing_deg, distance_km));
  }
  if (distance_km == 0.0) return origin;

  const double delta = distance_km / kEarthRadiusKm;
  const double theta = bearing_deg * kDegToRad;
  const double phi1 = origin.lat_deg() * kDegToRad;
  const double lambda1 = origin.lon_deg() * kDegToRad;

  const double sin_phi2 = std::clamp(
      std::sin(phi1) * std::cos(delta) +
          std::cos(phi1) * std::sin(delta) * std::cos(theta),
      -1.0, 1.0);
  const double phi2 = std::asin(sin_phi2);
  const double lambda2 =
      lambda1 + std::atan2(std::sin(theta) * std::sin(delta) * std::cos(phi1),
                           std::cos(delta) - std::sin(phi1) * sin_phi2);
  return GeoPoint(std::clamp(phi2 * kRadToDeg, -90.0, 90.0),
                  lambda2 * kRadToDeg);
}

}  // namespace hometown
