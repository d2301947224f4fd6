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
 * @file momentum_povm.hpp
 * Momentum observables mirroring localization.hpp on the frequency lattice.
 * Regions are sets of momentum storage slots; smearing kernels live on the
 * momentum lattice (offsets in multiples of dp).
 *
 * Covariance bookkeeping: translations leave every momentum probability
 * unchanged; a boost by v moves the distribution by -m v, so the transported
 * region is B + m v; grid-aligned rotations rotate the slot set.
 */

#pragma once

#include <vector>

#include "galilei/group.hpp"
#include "galilei/localization.hpp"
#include "galilei/state.hpp"

namespace galilei {

struct MomentumRegion {
    std::vector<std::size_t> slots; // sorted, unique
};

MomentumRegion momentum_box(const Grid &g, const std::array<double, 3> &lo,
                            const std::array<double, 3> &hi);
MomentumRegion momentum_ball(const Grid &g, const std::array<double, 3> &center, double radius);

/// Shift a momentum region by integer momentum-lattice steps.
MomentumRegion shift_momentum_region(const Grid &g, const MomentumRegion &r,
                                     const std::array<int, 3> &steps);

MomentumRegion rotate_momentum_region(const Grid &g, const MomentumRegion &r,
                                      const Quaternion &u);

/// Probability that the momentum lies in the region.
double momentum_prob(const State &psi, const MomentumRegion &r);

/// Momentum-lattice kernel constructor (offsets multiples of dp, weights sum to one).
SmearKernel make_momentum_kernel(const Grid &g, const std::vector<SmearKernel::Atom> &atoms);

double smeared_momentum_prob(const State &psi, const MomentumRegion &r, const SmearKernel &k);

/**
 * Covariance defect of the sharp momentum observable under one group element.
 * Translations may have any real parameter; boosts must be momentum-lattice
 * aligned (m v in dp steps); rotations must be grid-aligned.
 */
double momentum_covariance_defect(const State &psi, const MomentumRegion &r,
                                  const GroupElement &g, const Physics &ph);

/// Per-slot transport defect of a lattice boost: max |p(Vpsi)[q] - p(psi)[q + mv]|.
double boost_transport_defect(const State &psi, const std::array<int, 3> &steps,
                              const Physics &ph);

/// Mean-level boost response for generic v: max_i | <P_i>(Vpsi) - (<P_i>(psi) - m v_i) |.
double boost_mean_shift_defect(const State &psi, const std::array<double, 3> &v,
                               const Physics &ph);

struct ContinuitySweep {
    std::vector<int> n_values;
    std::vector<double> probabilities;
    double max_deviation = 0.0; // spread across resolutions
};

/**
 * Refinement stability of a fixed momentum set: the same physical packet is
 * sampled at n, 2n, 4n sites with dx held fixed (the box grows), and the
 * probability of the same set of momenta is recorded. A smooth momentum
 * distribution keeps the numbers flat; singular mass would concentrate.
 */
ContinuitySweep momentum_continuity_sweep(int n_base, double length_base, double hbar,
                                          const GaussianSpec &packet,
                                          const std::array<double, 3> &region_center,
                                          double region_radius, int doublings);

} // namespace galilei
