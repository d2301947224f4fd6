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
 * @file random_states.hpp
 * Deterministic admissible Gaussian draws: identical (seed, index) pairs
 * yield identical states, and every draw respects the admissibility margins
 * of its grid profile by construction.
 */

#pragma once

#include <cstdint>

#include "galilei/state.hpp"

namespace galilei {

struct StateProfile {
    double sigma_min = 0.0, sigma_max = 0.0; // position width range
    double center_span = 0.0;                // |x0| bound per axis
    double momentum_span = 0.0;              // |p0| bound per axis
};

/// Default laboratory boxes.
Grid default_grid_1d(double hbar = 1.0);                   // n=512, L=80
Grid default_grid_3d(double hbar = 1.0);                   // n=32, L=12

/// Envelope ranges keeping draws admissible on the given grid.
StateProfile profile_for(const Grid &g);

/// Deterministic draw; spin amplitudes are random on the unit sphere.
State random_admissible_state(const Grid &g, int two_s, const StateProfile &profile,
                              std::uint64_t seed, std::uint64_t index);

} // namespace galilei
