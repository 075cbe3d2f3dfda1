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

#include "hometown/error.hpp"

#include <fmt/format.h>

namespace hometown {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidCoordinate: return "InvalidCoordinate";
    case ErrorKind::kDegenerateCentroid: return "DegenerateCentroid";
    case ErrorKind::kInputTooLarge: return "InputTooLarge";
    case ErrorKind::kInvalidK: return "InvalidK";
    case ErrorKind::kInvalidThreshold: return "InvalidThreshold";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kTooFewPhotos: return "TooFewPhotos";
    case ErrorKind::kInsufficientTail: return "InsufficientTail";
    case ErrorKind::kNonPositiveCutoff: return "NonPositiveCutoff";
    case ErrorKind::kEmptySamples: return "EmptySamples";
    case ErrorKind::kNonPositiveSampleInLogScale:
      return "NonPositiveSampleInLogScale";
    case ErrorKind::kInvalidParams: return "InvalidParams";
    case ErrorKind::kEmptyCohort: return "EmptyCohort";
    case ErrorKind::kNoGroundTruth: return "NoGroundTruth";
    case ErrorKind::kEmptyErrors: return "EmptyErrors";
    case ErrorKind::kMalformedRow: return "MalformedRow";
    case ErrorKind::kMalformedDocument: return "MalformedDocument";
    case ErrorKind::kMalformedEntry: return "MalformedEntry";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorKind kind, std::size_t location,
                     const std::string& reason) {
  if (kind == ErrorKind::kMalformedEntry) {
    return fmt::format("entry {}: {}", location, reason);
  }
  return fmt::format("line {}: {}", location, reason);
}

}  // namespace

ParseError::ParseError(ErrorKind kind, std::size_t location, std::string reason)
    : Error(kind, describe(kind, location, reason)),
      location_(location),
      reason_(std::move(reason)) {}

}  // namespace hometown
