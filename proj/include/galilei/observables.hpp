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
 * @file observables.hpp
 * Generator applications and expectation helpers. Operators act by returning
 * a new state; expectations are taken on normalized states.
 *
 * For self-adjoint A and B the commutator expectation is evaluated as
 * <A psi, B psi> - <B psi, A psi>, which needs one application of each
 * operator and no second derivatives.
 */

#pragma once

#include <functional>

#include "galilei/group.hpp"
#include "galilei/state.hpp"

namespace galilei {

using Op = std::function<State(const State &)>;

/// Position multiplier X_axis.
Op position_op(int axis);

/// Momentum multiplier P_axis (diagonal in the momentum representation).
Op momentum_op(int axis);

/// Free Hamiltonian p^2/2m + E0.
Op hamiltonian_op(const Physics &ph);

/// Boost generator m X_axis.
Op boost_generator_op(int axis, const Physics &ph);

/// Total squared momentum p^2.
Op momentum_squared_op();

/// 2 m H - P^2, applied as the genuine composition of the two pieces.
Op casimir_op(const Physics &ph);

/// Spin component S_axis acting on the internal index (hbar from the grid).
Op spin_op(int axis);

/// Orbital angular momentum (X x P)_axis; requires a 3D grid.
Op orbital_op(int axis);

/// Total angular momentum, orbital plus spin.
Op total_angular_op(int axis);

std::complex<double> expect(const State &psi, const Op &op);

/// Variance <A^2> - <A>^2 of a self-adjoint operator.
double variance(const State &psi, const Op &op);

/// <psi | [A, B] | psi> for self-adjoint A, B.
std::complex<double> commutator_expect(const State &psi, const Op &a, const Op &b);

/// Convenience moments that do not build Op closures.
double mean_position(const State &psi, int axis);
double mean_momentum(const State &psi, int axis);
double variance_position(const State &psi, int axis);
double variance_momentum(const State &psi, int axis);
double mean_energy(const State &psi, const Physics &ph);

} // namespace galilei
