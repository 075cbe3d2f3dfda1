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

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hometown/geo.hpp"

namespace hometown {

using Timestamp = std::chrono::sys_seconds;

/// One geotagged photo. `tz_unknown` marks timestamps that came without a
/// zone (Flickr `datetaken`) and were stored as if they were UTC.
struct PhotoRecord {
  PhotoRecord(std::string photo_id, std::string owner_id, GeoPoint location,
              std::optional<Timestamp> taken_at = std::nullopt,
              bool tz_unknown = false);

  std::string photo_id;
  std::string owner_id;
  GeoPoint location;
  std::optional<Timestamp> taken_at;
  bool tz_unknown = false;

  friend bool operator==(const PhotoRecord&, const PhotoRecord&) = default;
};

struct TimeWindow {
  Timestamp earliest;
  Timestamp latest;

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// All photos of one user plus the optional self-reported hometown.
class UserDataset {
 public:
  /// Throws Error(kInvalidArgument) if any photo belongs to another owner.
  UserDataset(std::string owner_id, std::vector<PhotoRecord> photos,
              std::optional<GeoPoint> reported_home = std::nullopt);

  const std::string& owner_id() const noexcept { return owner_id_; }
  const std::vector<PhotoRecord>& photos() const noexcept { return photos_; }
  const std::optional<GeoPoint>& reported_home() const noexcept {
    return reported_home_;
  }
  /// Present iff at least one photo carries a timestamp.
  const std::optional<TimeWindow>& window() const noexcept { return window_; }

  std::vector<GeoPoint> locations() const;

 private:
  std::string owner_id_;
  std::vector<PhotoRecord> photos_;
  std::optional<GeoPoint> reported_home_;
  std::optional<TimeWindow> window_;
};

}  // namespace hometown
