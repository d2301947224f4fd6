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

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "galilei/fourier.hpp"
#include "galilei/random_states.hpp"
#include "galilei/state.hpp"

using namespace galilei;

namespace {

const Grid g1 = make_grid(1, 512, 80.0);

State sample_state(std::uint64_t index) {
    return random_admissible_state(g1, 0, profile_for(g1), 11, index);
}

} // namespace

TEST_SUITE("fourier") {

TEST_CASE("the transform is unitary between the two measures") {
    const State psi = sample_state(0);
    const auto mom = to_momentum(psi);
    double pos = 0.0, momm = 0.0;
    for (const cplx &a : psi.amp)
        pos += std::norm(a);
    for (const cplx &a : mom)
        momm += std::norm(a);
    CHECK(std::abs(pos * g1.dx() - momm * g1.dp()) < 1e-13);
}

TEST_CASE("round trips reproduce the state") {
    const State psi = sample_state(1);
    const State back = from_momentum(g1, psi.two_s, to_momentum(psi));
    CHECK(max_abs_diff(back, psi) < 1e-14);
}

TEST_CASE("a lattice plane wave lands in one slot") {
    const int slot = g1.n / 2 + 5;
    const double p = g1.momentum(slot);
    State pw = make_state(g1, 0);
    for (int k = 0; k < g1.n; ++k)
        pw.amp[static_cast<std::size_t>(k)] =
            std::polar(1.0 / std::sqrt(g1.length), p * g1.coord(k) / g1.hbar);
    const auto mom = to_momentum(pw);
    for (int q = 0; q < g1.n; ++q) {
        const double mass = std::norm(mom[static_cast<std::size_t>(q)]) * g1.dp();
        if (q == slot)
            CHECK(std::abs(mass - 1.0) < 1e-13);
        else
            CHECK(mass < 1e-26);
    }
}

TEST_CASE("a centered gaussian transforms to the closed form") {
    const double sigma = 1.1, x0 = -1.5, p0 = 0.8;
    GaussianSpec spec;
    spec.center = {x0, 0.0, 0.0};
    spec.momentum = {p0, 0.0, 0.0};
    spec.width = {sigma, 1.0, 1.0};
    const State psi = gaussian_state(g1, 0, spec);
    const auto mom = to_momentum(psi);
    const double coeff =
        std::pow(2.0 * sigma * sigma / std::numbers::pi, 0.25);
    for (int q = 0; q < g1.n; ++q) {
        const double p = g1.momentum(q);
        const cplx expected = coeff *
                              std::exp(-sigma * sigma * (p - p0) * (p - p0)) *
                              std::polar(1.0, -(p - p0) * x0);
        CHECK(std::abs(mom[static_cast<std::size_t>(q)] - expected) < 1e-13);
    }
}

TEST_CASE("a unit position multiplier is a bitwise identity") {
    const State psi = sample_state(2);
    State a = psi;
    apply_position_multiplier(a, [](const std::array<double, 3> &) {
        return cplx{1.0, 0.0};
    });
    CHECK(max_abs_diff(a, psi) == 0.0);
}

TEST_CASE("position multipliers act diagonally in position space") {
    const State psi = sample_state(3);
    State moved = psi;
    apply_position_multiplier(moved, [](const std::array<double, 3> &x) {
        return std::polar(1.0, -0.25 * x[0]);
    });
    for (std::size_t site = 0; site < g1.sites(); ++site) {
        const double x = g1.coord(static_cast<int>(site));
        const cplx expected = psi.amp[site] * std::polar(1.0, -0.25 * x);
        CHECK(std::abs(moved.amp[site] - expected) < 1e-15);
    }
}

TEST_CASE("momentum multipliers act diagonally in momentum space") {
    const State psi = sample_state(4);
    State shifted = psi;
    apply_momentum_multiplier(shifted, [](const std::array<double, 3> &p) {
        return std::polar(1.0, -0.4 * p[0]);
    });
    const auto before = to_momentum(psi);
    const auto after = to_momentum(shifted);
    for (int q = 0; q < g1.n; ++q) {
        const cplx expected = before[static_cast<std::size_t>(q)] *
                              std::polar(1.0, -0.4 * g1.momentum(q));
        CHECK(std::abs(after[static_cast<std::size_t>(q)] - expected) < 1e-13);
    }
}

TEST_CASE("three dimensional round trips also hold") {
    const Grid g3 = make_grid(3, 32, 12.0);
    const State psi = random_admissible_state(g3, 1, profile_for(g3), 11, 9);
    const State back = from_momentum(g3, psi.two_s, to_momentum(psi));
    CHECK(max_abs_diff(back, psi) < 1e-14);
}

} // TEST_SUITE
