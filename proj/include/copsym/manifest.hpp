// SPDX-License-Identifier: Apache-2.0
//
// copsym: visualization and nonparametric testing of bivariate copula symmetry
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace copsym {

inline constexpr const char* kToolVersion = "0.1.0";

/// SHA-256 hex digest of a byte string / file.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

/// Reproduction record written alongside every CLI output: the subcommand,
/// its fully resolved configuration, the root seed, a content digest of the
/// input file (empty when the command takes none), and the produced files.
/// `copsym replay <manifest>` re-runs the command from this record.
struct RunManifest {
    std::string command;
    nlohmann::json resolved_config;
    std::uint64_t root_seed = 0;
    std::string input_digest;
    std::vector<std::string> outputs;
    std::string tool_version = kToolVersion;
    double wall_seconds = 0.0;
};

void write_manifest(const std::string& path, const RunManifest& m);
RunManifest read_manifest(const std::string& path);

} // namespace copsym
