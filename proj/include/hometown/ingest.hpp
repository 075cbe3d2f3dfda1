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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hometown/geo.hpp"
#include "hometown/photo.hpp"

namespace hometown {

inline constexpr std::string_view kPhotosCsvHeader =
    "photo_id,owner_id,lat,lon,taken_at";
inline constexpr std::string_view kHomesCsvHeader = "owner_id,lat,lon";

using HomeMap = std::map<std::string, GeoPoint, std::less<>>;

struct ParseOptions {
  /// Strict mode throws on the first bad row; lenient mode skips and records.
  bool strict = true;
};

struct RowIssue {
  std::size_t location = 0;  // CSV: 1-based line; JSON: 0-based entry index
  std::string reason;
};

struct ParsedPhotos {
  std::vector<PhotoRecord> records;
  std::vector<RowIssue> rejected;
};

/// `YYYY-MM-DDTHH:MM:SS` followed by `Z` or a `+HH:MM`/`-HH:MM` offset,
/// converted to UTC.
std::optional<Timestamp> parse_rfc3339(std::string_view text);
/// `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_rfc3339(Timestamp t);
/// Flickr `datetaken`, `YYYY-MM-DD HH:MM:SS` without a zone, read as UTC.
std::optional<Timestamp> parse_flickr_datetaken(std::string_view text);

/// Splits one CSV line. Double-quoted fields may contain commas; `""` inside
/// quotes is a literal quote. Returns nullopt for an unterminated quote.
std::optional<std::vector<std::string>> split_csv_line(std::string_view line);

/// Reads the `photo_id,owner_id,lat,lon,taken_at` format. A missing or wrong
/// header always throws ParseError(kMalformedRow, 1, ...).
ParsedPhotos parse_photos_csv(std::istream& in, ParseOptions options = {});

/// Reads Flickr-API-shaped JSON: a top-level array of photo objects or the
/// `{"photos": {"photo": [...]}}` envelope. Structural problems throw
/// Error(kMalformedDocument); bad entries throw ParseError(kMalformedEntry)
/// in strict mode.
ParsedPhotos parse_flickr_json(std::istream& in, ParseOptions options = {});

/// Reads `owner_id,lat,lon`. Every problem, including a repeated owner_id,
/// throws ParseError(kMalformedRow).
HomeMap parse_homes_csv(std::istream& in);

/// One dataset per owner, ordered by owner_id, photos in input order.
std::vector<UserDataset> group_by_owner(std::span<const PhotoRecord> records,
                                        const HomeMap& homes = {});

/// Coordinates at 6 decimals; empty taken_at for photos without a timestamp.
void write_photos_csv(std::ostream& out, std::span<const PhotoRecord> records);
void write_homes_csv(std::ostream& out, const HomeMap& homes);

}  // namespace hometown
