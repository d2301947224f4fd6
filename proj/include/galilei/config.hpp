// Copyright 2026 the galilei-lab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file config.hpp
 * Run configuration: the laboratory boxes, physics constants, tolerance
 * tiers, seed, suite selection, and output paths. Parsed from an INI-style
 * file (sections of key = value lines, # comments) with CLI overrides
 * applied as dotted keys, e.g. physics.mass=2.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galilei {

struct RunConfig {
    // [grid] primary 1D box
    int grid_n = 512;
    double grid_length = 80.0;

    // [rotation_grid] 3D box for rotation and angular-momentum work
    int rot_n = 32;
    double rot_length = 12.0;
    int rot_two_s = 1;

    // [physics]
    double hbar = 1.0;
    double mass = 1.0;
    double energy_offset = 0.0;

    // [tolerances]
    double tol_exact = 1e-12;
    double tol_spectral = 1e-8;
    double tol_fit = 1e-6;

    // [run]
    std::uint64_t seed = 1;
    std::vector<std::string> suites{"all"};
    std::string report_path = "report.json";
    std::string csv_dir = ".";
};

/// Built-in desk-scale defaults (identical to an empty config file).
RunConfig default_config();

/// Parse an INI-style file over the defaults. Throws on malformed input.
RunConfig load_config(const std::string &path);

/// Apply one dotted override, e.g. "grid.n=256". Throws on unknown keys.
void apply_override(RunConfig &cfg, const std::string &assignment);

/// Throws std::invalid_argument when a field is out of range.
void validate(const RunConfig &cfg);

} // namespace galilei
