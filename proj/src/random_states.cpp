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

#include "galilei/random_states.hpp"

#include <cmath>
#include <random>

namespace galilei {

Grid default_grid_1d(double hbar) { return make_grid(1, 512, 80.0, hbar); }

Grid default_grid_3d(double hbar) { return make_grid(3, 32, 12.0, hbar); }

StateProfile profile_for(const Grid &g) {
    StateProfile p;
    if (g.dims == 1) {
        // Wide packets, generous travel room: widths resolve on the grid and
        // stay far from both the walls and the frequency cutoff.
        p.sigma_min = std::max(1.6 * g.dx(), g.length / 100.0);
        p.sigma_max = 2.0 * p.sigma_min;
        p.center_span = g.length / 10.0;
        p.momentum_span = g.momentum_cutoff() / 8.0;
    } else {
        // Small boxes leave little slack; keep packets narrow in position so
        // the five-sigma envelope fits, and nearly at rest in momentum.
        p.sigma_min = 1.8 * g.dx();
        p.sigma_max = 2.05 * g.dx();
        p.center_span = g.length / 30.0;
        p.momentum_span = 1.5 * g.dp();
    }
    return p;
}

State random_admissible_state(const Grid &g, int two_s, const StateProfile &profile,
                              std::uint64_t seed, std::uint64_t index) {
    // Feed both words through seed_seq so (seed, index) pairs never collide
    // by simple arithmetic coincidence.
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index & 0xffffffffu),
                      static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 gen(seq);

    std::uniform_real_distribution<double> sigma_dist(profile.sigma_min, profile.sigma_max);
    std::uniform_real_distribution<double> center_dist(-profile.center_span,
                                                       profile.center_span);
    std::uniform_real_distribution<double> momentum_dist(-profile.momentum_span,
                                                         profile.momentum_span);
    std::normal_distribution<double> unit(0.0, 1.0);

    GaussianSpec spec;
    for (int axis = 0; axis < g.dims; ++axis) {
        const auto a = static_cast<std::size_t>(axis);
        spec.width[a] = sigma_dist(gen);
        spec.center[a] = center_dist(gen);
        spec.momentum[a] = momentum_dist(gen);
    }

    const int sd = two_s + 1;
    spec.spin_amps.resize(static_cast<std::size_t>(sd));
    double spin_norm = 0.0;
    while (spin_norm < 1e-6) {
        spin_norm = 0.0;
        for (int s = 0; s < sd; ++s) {
            spec.spin_amps[static_cast<std::size_t>(s)] = cplx{unit(gen), unit(gen)};
            spin_norm += std::norm(spec.spin_amps[static_cast<std::size_t>(s)]);
        }
        spin_norm = std::sqrt(spin_norm);
    }
    for (auto &a : spec.spin_amps)
        a /= spin_norm;

    State psi = gaussian_state(g, two_s, spec);
    require_admissible(psi);
    return psi;
}

} // namespace galilei
