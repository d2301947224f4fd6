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
 * @file group.hpp
 * The projective inertial symmetry action on box states: space translations,
 * velocity boosts, time shifts, grid rotations, and the central phase
 * subgroup, together with norm defects for their exchange laws.
 *
 * Conventions (hbar from the grid, mass and the energy offset from Physics):
 *   translation U(a): psi(x) -> psi(x - a), a momentum-space multiplier
 *   boost V(v):       multiply by exp(-i m v.x / hbar)
 *   time T(t):        multiply by exp(-i t (p^2/2m + E0) / hbar)
 *   rotation R(u):    psi(x) -> D(u) psi(Ru^-1 x), u a unit quaternion
 *   central Z(l):     multiply by exp(-i m l / hbar)
 *
 * With these choices a boost shifts a state's mean momentum by -m v while
 * conjugation sends the momentum operator to P + m v; the exchange-law
 * defects below are the executable record of that bookkeeping.
 *
 * Exact-zero parameters short-circuit to a bitwise copy, so degenerate
 * identities hold exactly rather than to rounding.
 */

#pragma once

#include <variant>
#include <vector>

#include "galilei/spin.hpp"
#include "galilei/state.hpp"

namespace galilei {

struct Physics {
    double mass = 1.0;
    double energy_offset = 0.0; // E0 in the free Hamiltonian p^2/2m + E0
};

struct Translation {
    std::array<double, 3> a{0.0, 0.0, 0.0};
};
struct Boost {
    std::array<double, 3> v{0.0, 0.0, 0.0};
};
struct TimeShift {
    double t = 0.0;
};
struct Rotation {
    Quaternion u{};
};
struct Central {
    double lambda = 0.0;
};

using GroupElement = std::variant<Translation, Boost, TimeShift, Rotation, Central>;

/// Apply one group element. Rotations require a grid-aligned quaternion.
State apply(const State &psi, const GroupElement &g, const Physics &ph);

/// Apply a product of elements; the rightmost entry acts first.
State apply_word(const State &psi, const std::vector<GroupElement> &word, const Physics &ph);

/// || V(v)U(a) psi - exp(-i m v.a/hbar) U(a)V(v) psi ||
double weyl_defect(const State &psi, const std::array<double, 3> &v,
                   const std::array<double, 3> &a, const Physics &ph);

/// || T(t)U(a)T(-t) psi - U(a) psi ||
double time_translation_defect(const State &psi, double t, const std::array<double, 3> &a,
                               const Physics &ph);

/// || T(t)V(v)T(-t) psi - Z(-t|v|^2/2) U(-t v) V(v) psi ||
double time_boost_defect(const State &psi, double t, const std::array<double, 3> &v,
                         const Physics &ph);

/// || R(u)U(a)R(u)^-1 psi - U(Ru a) psi ||, a must be a lattice vector.
double rotation_translation_defect(const State &psi, const Quaternion &u,
                                   const std::array<double, 3> &a, const Physics &ph);

/// || R(u)V(v)R(u)^-1 psi - V(Ru v) psi ||, m v must be a momentum-lattice vector.
double rotation_boost_defect(const State &psi, const Quaternion &u,
                             const std::array<double, 3> &v, const Physics &ph);

/// || T(t)R(u) psi - R(u)T(t) psi ||
double rotation_time_defect(const State &psi, const Quaternion &u, double t, const Physics &ph);

/// || Z(l) g psi - g Z(l) psi ||
double central_commutation_defect(const State &psi, const GroupElement &g, double lambda,
                                  const Physics &ph);

/// Lattice-compatibility helpers for the rotation exchange laws.
std::array<double, 3> lattice_translation(const Grid &g, const std::array<int, 3> &steps);
std::array<double, 3> lattice_boost(const Grid &g, const std::array<int, 3> &steps,
                                    const Physics &ph);

} // namespace galilei
