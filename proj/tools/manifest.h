// Copyright 2026 The Census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CENSUS_TOOLS_MANIFEST_H_
#define CENSUS_TOOLS_MANIFEST_H_

#include <string>
#include <string_view>

#include "json.hpp"

namespace census::cli {

inline constexpr char kVersion[] = "0.1.0";

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

// Library and toolchain versions recorded in every manifest.
nlohmann::json VersionInfo();

// Where the manifest goes: `explicit_path` when set, else next to `out` as
// `<out>.manifest.json`, else empty (the caller falls back to stderr).
std::string ManifestPath(const std::string& explicit_path,
                         const std::string& out);

}  // namespace census::cli

#endif  // CENSUS_TOOLS_MANIFEST_H_
