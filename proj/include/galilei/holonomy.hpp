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
 * @file holonomy.hpp
 * The boost-translate-unboost-untranslate loop and the mass read off from
 * its phase.
 *
 * The loop word W = V(dv) U(da) V(-dv) U(-da) acts as multiplication by
 * exp(-i m dv.da / hbar) on every state, so
 *   phase := -arg <psi | W psi> = m dv.da / hbar
 * and the mass estimate is hbar * phase / (dv.da). The phase is a principal
 * value; loops whose phase approaches the branch cut are rejected.
 */

#pragma once

#include <vector>

#include "galilei/group.hpp"
#include "galilei/state.hpp"

namespace galilei {

struct LoopSpec {
    std::array<double, 3> dv{0.0, 0.0, 0.0};
    std::array<double, 3> da{0.0, 0.0, 0.0};
};

/// Apply the loop word. A loop with dv = 0 or da = 0 collapses to the identity.
State loop_apply(const State &psi, const LoopSpec &loop, const Physics &ph);

struct PhaseEstimate {
    double phase = 0.0;            // principal value in (-pi, pi]
    double magnitude_defect = 0.0; // | |<psi|W psi>| - 1 |
};

/// Loop phase on one normalized state. Throws when |phase| >= 0.99 pi.
PhaseEstimate loop_phase(const State &psi, const LoopSpec &loop, const Physics &ph);

struct MassEstimate {
    double mean = 0.0;
    double spread = 0.0; // max |value - mean|
    std::vector<double> values;
};

/// Mass from the loop phase on each state (at least two, dv.da nonzero).
MassEstimate extract_mass(const std::vector<State> &states, const LoopSpec &loop,
                          const Physics &ph);

struct MultiplierReport {
    double max_defect = 0.0;        // worst pointwise deviation from exp(-i m v.x/hbar)
    double origin_defect = 0.0;     // |W(0) - 1| read off at the origin site
    double spin_ratio_defect = 0.0; // spread of the ratio across spin components
};

/**
 * Read the boost multiplier off as the pointwise ratio (V(v) psi) / psi on
 * sites where |psi| exceeds the threshold, and compare with the expected
 * position-space phase.
 */
MultiplierReport boost_multiplier_check(const State &psi, const std::array<double, 3> &v,
                                        const Physics &ph, double amp_threshold = 1e-8);

} // namespace galilei
