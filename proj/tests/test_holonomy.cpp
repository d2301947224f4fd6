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
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "galilei/holonomy.hpp"
#include "galilei/random_states.hpp"

using namespace galilei;

namespace {

const Grid g1 = make_grid(1, 512, 80.0);
const Physics ph{1.0, 0.0};

State sample1(std::uint64_t index) {
    return random_admissible_state(g1, 0, profile_for(g1), 23, index);
}

LoopSpec loop1(double dv, double da) {
    LoopSpec l;
    l.dv = {dv, 0.0, 0.0};
    l.da = {da, 0.0, 0.0};
    return l;
}

} // namespace

TEST_SUITE("holonomy") {

TEST_CASE("a small loop produces the phase m dv da over hbar") {
    const PhaseEstimate pe = loop_phase(sample1(0), loop1(0.01, 0.01), ph);
    CHECK(std::abs(pe.phase - 1e-4) < 1e-12);
    CHECK(pe.magnitude_defect < 1e-12);
}

TEST_CASE("the loop phase is independent of the state") {
    std::vector<State> states;
    for (std::uint64_t i = 0; i < 6; ++i)
        states.push_back(sample1(i));
    const MassEstimate me = extract_mass(states, loop1(0.1, 0.1), ph);
    CHECK(std::abs(me.mean - 1.0) < 1e-10);
    CHECK(me.spread < 1e-10);
    CHECK(me.values.size() == 6);
}

TEST_CASE("the phase is bilinear in the loop legs") {
    const State psi = sample1(1);
    const double base = loop_phase(psi, loop1(0.1, 0.1), ph).phase;
    CHECK(std::abs(loop_phase(psi, loop1(0.05, 0.1), ph).phase - 0.5 * base) < 1e-13);
    CHECK(std::abs(loop_phase(psi, loop1(0.1, 0.05), ph).phase - 0.5 * base) < 1e-13);
    CHECK(std::abs(loop_phase(psi, loop1(0.05, 0.05), ph).phase - 0.25 * base) < 1e-13);
    // opposite orientation flips the sign
    CHECK(std::abs(loop_phase(psi, loop1(-0.1, 0.1), ph).phase + base) < 1e-13);
}

TEST_CASE("the recovered mass tracks the physics mass") {
    std::vector<State> states{sample1(2), sample1(3)};
    for (double m : {0.5, 2.0, 7.25}) {
        const MassEstimate me = extract_mass(states, loop1(0.1, 0.1), Physics{m, 0.0});
        CHECK(std::abs(me.mean - m) / m < 1e-9);
    }
}

TEST_CASE("a loop with a missing leg does nothing") {
    const State psi = sample1(4);
    LoopSpec noboost;
    noboost.da = {0.3, 0.0, 0.0};
    CHECK(max_abs_diff(loop_apply(psi, noboost, ph), psi) == 0.0);
    LoopSpec noshift;
    noshift.dv = {0.2, 0.0, 0.0};
    CHECK(max_abs_diff(loop_apply(psi, noshift, ph), psi) == 0.0);
}

TEST_CASE("phases near the branch cut are rejected") {
    // m dv da = 3.13 rad sits between the 0.99 pi guard and the cut at pi
    CHECK_THROWS_AS(loop_phase(sample1(5), loop1(1.0, 3.13), ph), std::invalid_argument);
}

TEST_CASE("mass extraction validates its inputs") {
    std::vector<State> one{sample1(6)};
    CHECK_THROWS_AS(extract_mass(one, loop1(0.1, 0.1), ph), std::invalid_argument);
    std::vector<State> two{sample1(6), sample1(7)};
    CHECK_THROWS_AS(extract_mass(two, loop1(0.0, 0.1), ph), std::invalid_argument);
}

TEST_CASE("the loop magnitude stays on the unit circle") {
    const PhaseEstimate pe = loop_phase(sample1(8), loop1(0.1, 0.1), ph);
    CHECK(pe.magnitude_defect < 1e-12);
}

} // TEST_SUITE
