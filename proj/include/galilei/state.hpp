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
 * @file state.hpp
 * Spinor wavefunctions on the periodic box, stored in the position
 * representation. Layout is site-major with the spin index fastest:
 * amp[site * spin_dim + sigma].
 *
 * The inner product carries the volume element dx^dims, so norms approximate
 * the continuum L2 norm and region sums approximate probabilities.
 */

#pragma once

#include <complex>
#include <vector>

#include "galilei/grid.hpp"

namespace galilei {

using cplx = std::complex<double>;

struct State {
    Grid grid;
    int two_s = 0; // twice the spin: 0, 1, 2, 3, ...
    std::vector<cplx> amp;

    int spin_dim() const { return two_s + 1; }
    std::size_t size() const { return grid.sites() * static_cast<std::size_t>(spin_dim()); }
};

/// Zero state with allocated storage.
State make_state(const Grid &grid, int two_s);

/// Volume element dx^dims.
double volume_element(const Grid &grid);

cplx inner(const State &a, const State &b);
double norm(const State &a);
void normalize(State &a);

double max_abs_diff(const State &a, const State &b);

/// ||a - b|| in the grid L2 norm.
double norm_diff(const State &a, const State &b);

struct GaussianSpec {
    std::array<double, 3> center{0.0, 0.0, 0.0};
    std::array<double, 3> momentum{0.0, 0.0, 0.0};
    std::array<double, 3> width{1.0, 1.0, 1.0}; // position standard deviation per axis
    std::vector<cplx> spin_amps;                // defaults to (1, 0, ...) when empty
};

/**
 * Normalized Gaussian wavepacket
 *   psi(x) ~ exp(-(x-c)^2 / 4 sigma^2) exp(i p0 . x / hbar) (x) spinor.
 * Preconditions: each width at least 1.5 dx (resolvable on the grid), the
 * five-sigma envelope inside the box, and the five-sigma momentum envelope
 * inside the Nyquist cutoff. Violations throw std::invalid_argument.
 */
State gaussian_state(const Grid &grid, int two_s, const GaussianSpec &spec);

struct TailReport {
    double boundary_mass = 0.0; // probability mass in the outermost cell shell
    double nyquist_mass = 0.0;  // momentum mass in the outermost frequency shell
};

/// Probability mass sitting where the torus stops looking like free space.
TailReport tail_masses(const State &psi);

/// True when both tail masses stay at or below tol.
bool admissible(const State &psi, double tol = 1e-10);

/// Throws std::invalid_argument when the state is not admissible.
void require_admissible(const State &psi, double tol = 1e-10);

} // namespace galilei
