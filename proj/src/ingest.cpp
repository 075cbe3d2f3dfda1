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

#include "hometown/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "hometown/error.hpp"

namespace hometown {

namespace {

using namespace std::chrono;

std::optional<int> parse_digits(std::string_view text) {
  int value = 0;
  if (text.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return value;
}

// Parses "YYYY-MM-DD?HH:MM:SS" where ? is `separator`.
std::optional<Timestamp> parse_date_time(std::string_view text, char separator) {
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
      text[10] != separator || text[13] != ':' || text[16] != ':') {
    return std::nullopt;
  }
  const auto y = parse_digits(text.substr(0, 4));
  const auto mo = parse_digits(text.substr(5, 2));
  const auto d = parse_digits(text.substr(8, 2));
  const auto h = parse_digits(text.substr(11, 2));
  const auto mi = parse_digits(text.substr(14, 2));
  const auto s = parse_digits(text.substr(17, 2));
  if (!y || !mo || !d || !h || !mi || !s) return std::nullopt;
  const year_month_day ymd{year{*y}, month{static_cast<unsigned>(*mo)},
                           day{static_cast<unsigned>(*d)}};
  if (!ymd.ok() || *h > 23 || *mi > 59 || *s > 60) return std::nullopt;
  return sys_days{ymd} + hours{*h} + minutes{*mi} + seconds{*s};
}

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  if (text.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Validates a coordinate pair; returns the failure reason or the point.
struct CoordinateResult {
  std::optional<GeoPoint> point;
  std::string reason;
};

CoordinateResult make_coordinate(std::optional<double> lat, std::optional<double> lon,
                                 std::string_view lat_text, std::string_view lon_text) {
  if (!lat) return {std::nullopt, fmt::format("unparseable latitude '{}'", lat_text)};
  if (!lon) return {std::nullopt, fmt::format("unparseable longitude '{}'", lon_text)};
  if (*lat < -90.0 || *lat > 90.0) return {std::nullopt, "latitude out of range"};
  if (*lon < -180.0 || *lon > 180.0) return {std::nullopt, "longitude out of range"};
  return {GeoPoint(*lat, *lon), {}};
}

bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string csv_field(std::string_view field) {
  if (!needs_quoting(field)) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Reads the header line, stripping a UTF-8 BOM. Throws on mismatch.
void expect_header(std::istream& in, std::string_view expected) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(ErrorKind::kMalformedRow, 1, "missing header");
  }
  std::string_view view = trim_cr(line);
  if (view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
  if (view != expected) {
    throw ParseError(ErrorKind::kMalformedRow, 1,
                     fmt::format("expected header '{}'", expected));
  }
}

void reject(ParsedPhotos& parsed, const ParseOptions& options, ErrorKind kind,
            std::size_t location, std::string reason) {
  if (options.strict) throw ParseError(kind, location, std::move(reason));
  parsed.rejected.push_back({location, std::move(reason)});
}

std::string format_coordinate(double degrees) {
  std::string s = fmt::format("{:.6f}", degrees);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::optional<Timestamp> parse_rfc3339(std::string_view text) {
  if (text.size() < 20) return std::nullopt;
  auto base = parse_date_time(text.substr(0, 19), 'T');
  if (!base) return std::nullopt;
  const std::string_view zone = text.substr(19);
  if (zone == "Z") return base;
  if (zone.size() != 6 || (zone[0] != '+' && zone[0] != '-') || zone[3] != ':') {
    return std::nullopt;
  }
  const auto oh = parse_digits(zone.substr(1, 2));
  const auto om = parse_digits(zone.substr(4, 2));
  if (!oh || !om || *oh > 23 || *om > 59) return std::nullopt;
  const seconds offset = hours{*oh} + minutes{*om};
  return zone[0] == '+' ? *base - offset : *base + offset;
}

std::string format_rfc3339(Timestamp t) {
  const sys_days day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss<seconds> tod{t - day_point};
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                     tod.hours().count(), tod.minutes().count(), tod.seconds().count());
}

std::optional<Timestamp> parse_flickr_datetaken(std::string_view text) {
  return parse_date_time(text, ' ');
}

std::optional<std::vector<std::string>> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) return std::nullopt;
  return fields;
}

ParsedPhotos parse_photos_csv(std::istream& in, ParseOptions options) {
  expect_header(in, kPhotosCsvHeader);
  ParsedPhotos parsed;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim_cr(line);
    if (view.empty()) continue;
    const auto fields = split_csv_line(view);
    if (!fields) {
      reject(parsed, options, ErrorKind::kMalformedRow, line_no, "unterminated quote");
      continue;
    }
    if (fields->size() != 5) {
      reject(parsed, options, ErrorKind::kMalformedRow, line_no,
             fmt::format("expected 5 fields, got {}", fields->size()));
      continue;
    }
    const auto& f = *fields;
    if (f[0].empty() || f[1].empty()) {
      reject(parsed, options, ErrorKind::kMalformedRow, line_no,
             f[0].empty() ? "empty photo_id" : "empty owner_id");
      continue;
    }
    CoordinateResult coord = make_coordinate(parse_double(f[2]), parse_double(f[3]), f[2], f[3]);
    if (!coord.point) {
      reject(parsed, options, ErrorKind::kMalformedRow, line_no, coord.reason);
      continue;
    }
    std::optional<Timestamp> taken_at;
    if (!f[4].empty()) {
      taken_at = parse_rfc3339(f[4]);
      if (!taken_at) {
        reject(parsed, options, ErrorKind::kMalformedRow, line_no,
               fmt::format("bad timestamp '{}'", f[4]));
        continue;
      }
    }
    parsed.records.emplace_back(f[0], f[1], *coord.point, taken_at);
  }
  return parsed;
}

ParsedPhotos parse_flickr_json(std::istream& in, ParseOptions options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kMalformedDocument, fmt::format("invalid JSON: {}", e.what()));
  }
  const nlohmann::json* entries = nullptr;
  if (doc.is_array()) {
    entries = &doc;
  } else if (doc.is_object() && doc.contains("photos") && doc["photos"].is_object() &&
             doc["photos"].contains("photo") && doc["photos"]["photo"].is_array()) {
    entries = &doc["photos"]["photo"];
  } else {
    throw Error(ErrorKind::kMalformedDocument,
                "expected a photo array or a {\"photos\": {\"photo\": [...]}} envelope");
  }

  // Strings or numbers, as the upstream API has returned both over time.
  const auto text_of = [](const nlohmann::json& v) -> std::optional<std::string> {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    return std::nullopt;
  };

  ParsedPhotos parsed;
  for (std::size_t index = 0; index < entries->size(); ++index) {
    const nlohmann::json& entry = (*entries)[index];
    const auto fail = [&](std::string reason) {
      reject(parsed, options, ErrorKind::kMalformedEntry, index, std::move(reason));
    };
    if (!entry.is_object()) {
      fail("entry is not an object");
      continue;
    }
    std::optional<std::string> id, owner, lat_text, lon_text;
    if (entry.contains("id")) id = text_of(entry["id"]);
    if (entry.contains("owner") && entry["owner"].is_string()) owner = entry["owner"].get<std::string>();
    if (entry.contains("latitude")) lat_text = text_of(entry["latitude"]);
    if (entry.contains("longitude")) lon_text = text_of(entry["longitude"]);
    if (!id || id->empty()) {
      fail("missing id");
      continue;
    }
    if (!owner || owner->empty()) {
      fail("missing owner");
      continue;
    }
    if (!lat_text || !lon_text) {
      fail("missing latitude/longitude");
      continue;
    }
    CoordinateResult coord =
        make_coordinate(parse_double(*lat_text), parse_double(*lon_text), *lat_text, *lon_text);
    if (!coord.point) {
      fail(coord.reason);
      continue;
    }
    std::optional<Timestamp> taken_at;
    if (entry.contains("datetaken") && !entry["datetaken"].is_null()) {
      const auto raw = text_of(entry["datetaken"]);
      if (raw) taken_at = parse_flickr_datetaken(*raw);
      if (!taken_at) {
        fail(fmt::format("bad datetaken {}", entry["datetaken"].dump()));
        continue;
      }
    }
    parsed.records.emplace_back(*id, *owner, *coord.point, taken_at, taken_at.has_value());
  }
  return parsed;
}

HomeMap parse_homes_csv(std::istream& in) {
  expect_header(in, kHomesCsvHeader);
  HomeMap homes;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim_cr(line);
    if (view.empty()) continue;
    const auto fields = split_csv_line(view);
    if (!fields || fields->size() != 3) {
      throw ParseError(ErrorKind::kMalformedRow, line_no, "expected 3 fields");
    }
    const auto& f = *fields;
    if (f[0].empty()) throw ParseError(ErrorKind::kMalformedRow, line_no, "empty owner_id");
    CoordinateResult coord = make_coordinate(parse_double(f[1]), parse_double(f[2]), f[1], f[2]);
    if (!coord.point) throw ParseError(ErrorKind::kMalformedRow, line_no, coord.reason);
    if (!homes.emplace(f[0], *coord.point).second) {
      throw ParseError(ErrorKind::kMalformedRow, line_no,
                       fmt::format("duplicate owner_id '{}'", f[0]));
    }
  }
  return homes;
}

std::vector<UserDataset> group_by_owner(std::span<const PhotoRecord> records,
                                        const HomeMap& homes) {
  std::map<std::string, std::vector<PhotoRecord>, std::less<>> by_owner;
  for (const PhotoRecord& record : records) by_owner[record.owner_id].push_back(record);
  std::vector<UserDataset> out;
  out.reserve(by_owner.size());
  for (auto& [owner, photos] : by_owner) {
    std::optional<GeoPoint> home;
    if (const auto it = homes.find(owner); it != homes.end()) home = it->second;
    out.emplace_back(owner, std::move(photos), home);
  }
  return out;
}

void write_photos_csv(std::ostream& out, std::span<const PhotoRecord> records) {
  out << kPhotosCsvHeader << '\n';
  for (const PhotoRecord& r : records) {
    out << csv_field(r.photo_id) << ',' << csv_field(r.owner_id) << ','
        << format_coordinate(r.location.lat_deg()) << ','
        << format_coordinate(r.location.lon_deg()) << ','
        << (r.taken_at ? format_rfc3339(*r.taken_at) : std::string()) << '\n';
  }
}

void write_homes_csv(std::ostream& out, const HomeMap& homes) {
  out << kHomesCsvHeader << '\n';
  for (const auto& [owner, home] : homes) {
    out << csv_field(owner) << ',' << format_coordinate(home.lat_deg()) << ','
        << format_coordinate(home.lon_deg()) << '\n';
  }
}

}  // namespace hometown
