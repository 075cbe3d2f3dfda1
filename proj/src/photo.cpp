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

#include "hometown/photo.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

PhotoRecord::PhotoRecord(std::string photo_id, std::string owner_id,
                         GeoPoint location, std::optional<Timestamp> taken_at,
                         bool tz_unknown)
    : photo_id(std::move(photo_id)),
      owner_id(std::move(owner_id)),
      location(location),
      taken_at(taken_at),
      tz_unknown(tz_unknown) {
  if (this->photo_id.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty photo_id");
  }
  if (this->owner_id.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty owner_id");
  }
}

UserDataset::UserDataset(std::string owner_id, std::vector<PhotoRecord> photos,
                         std::optional<GeoPoint> reported_home)
    : owner_id_(std::move(owner_id)),
      photos_(std::move(photos)),
      reported_home_(reported_home) {
  for (const PhotoRecord& photo : photos_) {
    if (photo.owner_id != owner_id_) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("photo {} belongs to {}, not {}", photo.photo_id,
                              photo.owner_id, owner_id_));
    }
    if (!photo.taken_at) continue;
    if (!window_) {
      window_ = TimeWindow{*photo.taken_at, *photo.taken_at};
    } else {
      window_->earliest = std::min(window_->earliest, *photo.taken_at);
      window_->latest = std::max(window_->latest, *photo.taken_at);
    }
  }
}

std::vector<GeoPoint> UserDataset::locations() const {
  std::vector<GeoPoint> out;
  out.reserve(photos_.size());
  for (const PhotoRecord& photo : photos_) out.push_back(photo.location);
  return out;
}

}  // namespace hometown
