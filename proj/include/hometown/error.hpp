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
#include <stdexcept>
#include <string>
#include <string_view>

namespace hometown {

enum class ErrorKind {
  kInvalidCoordinate,
  kDegenerateCentroid,
  kInputTooLarge,
  kInvalidK,
  kInvalidThreshold,
  kInvalidArgument,
  kTooFewPhotos,
  kInsufficientTail,
  kNonPositiveCutoff,
  kEmptySamples,
  kNonPositiveSampleInLogScale,
  kInvalidParams,
  kEmptyCohort,
  kNoGroundTruth,
  kEmptyErrors,
  kMalformedRow,
  kMalformedDocument,
  kMalformedEntry,
  kIo,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every validation failure raised by the library. The
/// CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A rejected input row (CSV, 1-based line) or entry (JSON, 0-based index).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t location, std::string reason);

  std::size_t location() const noexcept { return location_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t location_;
  std::string reason_;
};

}  // namespace hometown
