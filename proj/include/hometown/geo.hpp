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

#include <span>

namespace hometown {

/// Mean Earth radius used for all great-circle computations, in km.
inline constexpr double kEarthRadiusKm = 6371.0;

/// A latitude/longitude pair in degrees. Latitude must lie in [-90, 90];
/// longitude is normalized into (-180, 180]. At the poles longitude is
/// meaningless and is canonicalized to 0 so that coincident points compare
/// equal. Throws Error(kInvalidCoordinate) on out-of-range or non-finite
/// input.
class GeoPoint {
 public:
  GeoPoint() = default;
  GeoPoint(double lat_deg, double lon_deg);

  double lat_deg() const noexcept { return lat_deg_; }
  double lon_deg() const noexcept { return lon_deg_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double lat_deg_ = 0.0;
  double lon_deg_ = 0.0;
};

/// Maps any finite longitude into (-180, 180].
double normalize_longitude(double lon_deg);

/// Lexicographic (lat, lon) order, used for deterministic tie-breaking.
bool lat_lon_less(const GeoPoint& a, const GeoPoint& b) noexcept;

/// Great-circle distance in km on the kEarthRadiusKm sphere.
double haversine_km(const GeoPoint& a, const GeoPoint& b) noexcept;

/// Mean of the points' unit vectors, renormalized onto the sphere. Agrees
/// with the plain lat/lon average for tight clusters and stays correct across
/// the antimeridian. Coincident points (a singleton included) come back
/// exactly. Throws Error(kInvalidArgument) for an empty span and
/// Error(kDegenerateCentroid) when the mean vector is (near) zero, e.g. for an
/// antipodal pair.
GeoPoint spherical_centroid(std::span<const GeoPoint> points);

/// Forward great-circle problem: the point reached by travelling
/// `distance_km` from `origin` with initial bearing `bearing_deg` (clockwise
/// from north).
GeoPoint geodesic_destination(const GeoPoint& origin, double bearing_deg,
                              double distance_km);

}  // namespace hometown
