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

#include <iosfwd>
#include <string>
#include <vector>

namespace hometown {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hometown` tool. `args` excludes the program name.
/// Reports and CSVs go to files named by the flags, or to `out` when a path
/// is omitted or "-"; diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace hometown
