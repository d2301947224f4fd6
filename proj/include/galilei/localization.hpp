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
 * @file localization.hpp
 * Position observables on the box: sharp region effects, their smearings by
 * finite atomic kernels, operator norms, covariance defects, and states
 * focused into small balls.
 *
 * A region is a set of grid sites. The smeared effect of region B under a
 * kernel with atoms (y_j, w_j) is the position multiplier
 *   f(x) = sum_j w_j 1_B(x + y_j)
 * with periodic wrap; its operator norm is max_x f(x). Kernel atoms must sit
 * on lattice vectors so the smearing is an exact site shift.
 */

#pragma once

#include <vector>

#include "galilei/group.hpp"
#include "galilei/state.hpp"

namespace galilei {

struct Region {
    std::vector<std::size_t> sites; // sorted, unique
};

/// Sites with lo <= x < hi per axis (half-open box, unused axes ignored in 1D).
Region box_region(const Grid &g, const std::array<double, 3> &lo,
                  const std::array<double, 3> &hi);

/// Sites with |x - center| <= radius (an interval in 1D).
Region ball_region(const Grid &g, const std::array<double, 3> &center, double radius);

Region region_union(const Region &a, const Region &b);
bool regions_disjoint(const Region &a, const Region &b);

/// Translate a region by a lattice vector (integer steps per axis).
Region translate_region(const Grid &g, const Region &r, const std::array<int, 3> &steps);

/// Rotate a region by a grid-aligned rotation.
Region rotate_region(const Grid &g, const Region &r, const Quaternion &u);

struct SmearKernel {
    struct Atom {
        std::array<double, 3> offset{0.0, 0.0, 0.0};
        double weight = 0.0;
    };
    std::vector<Atom> atoms;
};

/// Point kernel: one atom at the origin, weight one.
SmearKernel sharp_kernel();

/**
 * Validating kernel constructor. Atom offsets must lie on the lattice
 * (within 1e-9 dx, then snapped); weights must be positive and sum to one
 * within 1e-12.
 */
SmearKernel make_kernel(const Grid &g, const std::vector<SmearKernel::Atom> &atoms);

/// Probability of the smeared region effect in state psi.
double povm_prob(const State &psi, const Region &b, const SmearKernel &k);

/// Independent double-sum evaluation of the same probability (cross-check oracle).
double povm_prob_bruteforce(const State &psi, const Region &b, const SmearKernel &k);

/// Operator norm of the smeared effect: max over sites of the smeared indicator.
double povm_norm(const Grid &g, const Region &b, const SmearKernel &k);

struct FocusResult {
    State state;
    double achieved = 0.0; // probability captured by the requested ball
};

/**
 * A state whose ball-of-given-radius probability reaches at least 1 - epsilon.
 * Preconditions: radius > 5 dx and epsilon in (0, 1/2). Throws when the grid
 * cannot resolve a packet narrow enough.
 */
FocusResult focusing_state(const Grid &g, int two_s, double radius, double epsilon,
                           const std::array<double, 3> &center = {0.0, 0.0, 0.0});

/**
 * Covariance defect of the smeared position observable under one group
 * element: translations (lattice steps) move the region, boosts leave it
 * fixed, rotations (grid-aligned) rotate region and kernel. Other elements
 * are rejected.
 */
double covariance_defect(const State &psi, const Region &b, const GroupElement &g,
                         const SmearKernel &k, const Physics &ph);

} // namespace galilei
