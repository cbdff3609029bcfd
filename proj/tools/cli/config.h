// Copyright 2026 The fluxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXLAB_TOOLS_CONFIG_H
#define FLUXLAB_TOOLS_CONFIG_H

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fluxlab/coupled_system.h"
#include "fluxlab/noise_dephasing.h"
#include "json.hpp"

namespace fluxlab::cli {

/// Malformed or unknown configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    CoupledSystem system;
    NoiseSpectrum noise;
    int mc_ensembles = 10000;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "csv";

    /// Canonical JSON of the effective configuration.
    nlohmann::ordered_json to_json() const;
    /// FNV-1a of the canonical JSON text, output block excluded.
    std::uint64_t hash() const;
};

/// Reads a JSON config. Every key is optional; unknown keys and wrong types
/// raise ConfigError naming the JSON pointer of the offending entry.
RunConfig load_config(const std::string &path);
RunConfig parse_config(const nlohmann::json &doc);

std::uint64_t fnv1a(const std::string &bytes);

}  // namespace fluxlab::cli

#endif  // FLUXLAB_TOOLS_CONFIG_H
