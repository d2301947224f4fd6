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
 * @file fourier.hpp
 * Unitary centered Fourier transform between the position and momentum
 * representations:
 *
 *   psihat(p) = (dx / sqrt(2 pi hbar))^d  sum_k psi(x_k) exp(-i p x_k / hbar)
 *   psi(x)   = (dp / sqrt(2 pi hbar))^d  sum_q psihat(p_q) exp(+i p_q x / hbar)
 *
 * Both sides use the ascending centered orderings declared in grid.hpp. The
 * pair is exactly unitary on the lattice (Parseval holds to rounding), which
 * the unit tests pin against analytic plane waves and Gaussians.
 *
 * Momentum amplitudes use the same site-major, spin-fastest layout as State.
 */

#pragma once

#include <functional>
#include <vector>

#include "galilei/state.hpp"

namespace galilei {

/// Momentum-representation amplitudes of psi.
std::vector<cplx> to_momentum(const State &psi);

/// Rebuild a position-representation state from momentum amplitudes.
State from_momentum(const Grid &grid, int two_s, const std::vector<cplx> &mom);

/// Multiply by a diagonal momentum-space function f(p), p the momentum vector.
void apply_momentum_multiplier(State &psi,
                               const std::function<cplx(const std::array<double, 3> &)> &f);

/// Multiply by a diagonal position-space function f(x).
void apply_position_multiplier(State &psi,
                               const std::function<cplx(const std::array<double, 3> &)> &f);

} // namespace galilei
