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
 * @file dynamics.hpp
 * Free time evolution at expectation level: straight-line motion of the mean
 * position, conserved momentum and energy, ballistic variance growth, and
 * the scalar 2mH - P^2 that pins the free Hamiltonian.
 *
 * Evolution is exact in the momentum representation, so trajectories carry
 * no integrator error; what is being tested is the operator bookkeeping.
 * A travel horizon guard stops packets before wraparound contaminates means.
 */

#pragma once

#include <string>
#include <vector>

#include "galilei/group.hpp"
#include "galilei/state.hpp"

namespace galilei {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::array<double, 3>> mean_x;
    std::vector<std::array<double, 3>> mean_p;
    std::vector<std::array<double, 3>> var_x;
    std::vector<double> mean_h;
    int dims = 1;
};

/// Throws when |<P>/m| t_max + 5 sigma_x(t_max) leaves the half box.
void check_travel_horizon(const State &psi, double t_max, const Physics &ph);

/// Expectation records at n_steps+1 uniform times in [0, t_max].
Trajectory heisenberg_trajectory(const State &psi0, double t_max, int n_steps,
                                 const Physics &ph);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

/// Ordinary least squares fit over all samples.
LineFit fit_line(const std::vector<double> &t, const std::vector<double> &y);

/// max_i | <psi_i, (2mH - P^2) psi_i> - 2 m E0 |
double casimir_expectation_defect(const std::vector<State> &states, const Physics &ph);

/// max over states and elements of || (2mH - P^2) g psi - g (2mH - P^2) psi ||
double casimir_commutation_defect(const std::vector<State> &states,
                                  const std::vector<GroupElement> &elements, const Physics &ph);

/**
 * Boost then evolve: | <X>(t) - (x0 + (p0/m - v) t) | per axis, max. The
 * minus sign is this artifact's boost phase convention; the drift magnitude
 * is convention-free and equals |v| t for a packet at rest.
 */
double boost_then_evolve_defect(const State &psi, const std::array<double, 3> &v, double t,
                                const Physics &ph);

/// max_t | Var(X)(t) - (Var(X)(0) + t^2 Var(P)/m^2) | for an uncorrelated packet.
double variance_growth_defect(const State &psi, double t_max, int n_steps, const Physics &ph);

/// max_t | <H>(t) - <H>(0) |
double energy_conservation_defect(const State &psi, double t_max, int n_steps,
                                  const Physics &ph);

/**
 * Worst change in any recorded trajectory quantity when the energy offset
 * moves from e0_a to e0_b; the offset is a global phase and must not act.
 */
double energy_offset_invariance_defect(const State &psi, double t_max, int n_steps,
                                       double mass, double e0_a, double e0_b);

/// Columns: time, mean x, mean p, Var(x), mean H (per axis for 3D grids).
void write_trajectory_csv(const Trajectory &tr, const std::string &path);

} // namespace galilei
