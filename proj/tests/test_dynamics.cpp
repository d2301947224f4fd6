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
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include <doctest.h>

#include "galilei/dynamics.hpp"
#include "galilei/observables.hpp"
#include "galilei/random_states.hpp"

using namespace galilei;

namespace {

const Grid g1 = make_grid(1, 512, 80.0);
const Physics ph{1.0, 0.0};

State travelling_packet() {
    GaussianSpec spec;
    spec.center = {-8.0, 0.0, 0.0};
    spec.momentum = {2.0, 0.0, 0.0};
    spec.width = {2.0, 2.0, 2.0};
    return gaussian_state(g1, 0, spec);
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("the mean position moves at momentum over mass") {
    const State psi = travelling_packet();
    const Trajectory tr = heisenberg_trajectory(psi, 8.0, 32, ph);
    std::vector<double> mx(tr.times.size());
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        mx[i] = tr.mean_x[i][0];
    const LineFit fit = fit_line(tr.times, mx);
    CHECK(std::abs(fit.slope - 2.0) < 1e-6);
    CHECK(fit.max_residual < 1e-8);
    CHECK(fit.intercept == doctest::Approx(-8.0).epsilon(1e-6));
}

TEST_CASE("momentum and energy are conserved") {
    const State psi = travelling_packet();
    const Trajectory tr = heisenberg_trajectory(psi, 8.0, 16, ph);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        CHECK(std::abs(tr.mean_p[i][0] - tr.mean_p[0][0]) < 1e-12);
        CHECK(std::abs(tr.mean_h[i] - tr.mean_h[0]) < 1e-12);
    }
}

TEST_CASE("the variance grows ballistically") {
    const State psi = travelling_packet();
    CHECK(variance_growth_defect(psi, 8.0, 16, ph) < 1e-6);
}

TEST_CASE("wrapping packets are refused") {
    GaussianSpec spec;
    spec.center = {-8.0, 0.0, 0.0};
    spec.momentum = {2.0, 0.0, 0.0};
    spec.width = {1.2, 1.2, 1.2};
    const State tight = gaussian_state(g1, 0, spec);
    // sigma 1.2 spreads too fast: the envelope reaches the wall before t = 8
    CHECK_THROWS_AS(heisenberg_trajectory(tight, 8.0, 8, ph), std::invalid_argument);
    CHECK_NOTHROW(heisenberg_trajectory(tight, 2.0, 4, ph));
}

TEST_CASE("boosting then evolving drifts by p0 over m minus v") {
    GaussianSpec rest;
    rest.width = {1.5, 1.5, 1.5};
    const State psi = gaussian_state(g1, 0, rest);
    CHECK(boost_then_evolve_defect(psi, {1.0, 0.0, 0.0}, 2.0, ph) < 1e-6);
    CHECK(boost_then_evolve_defect(psi, {1.0, 0.0, 0.0}, 0.0, ph) < 1e-10);
    CHECK(boost_then_evolve_defect(psi, {-0.5, 0.0, 0.0}, 3.0, ph) < 1e-6);
}

TEST_CASE("the energy offset shifts nothing but the energy") {
    const State psi = travelling_packet();
    CHECK(energy_offset_invariance_defect(psi, 8.0, 8, ph.mass, 0.0, 3.7) < 1e-12);
}

TEST_CASE("line fits are exact on affine data") {
    const std::vector<double> t{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> y(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        y[i] = 0.75 * t[i] - 2.0;
    const LineFit fit = fit_line(t, y);
    CHECK(fit.slope == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(fit.max_residual < 1e-14);
    CHECK_THROWS_AS(fit_line({1.0}, {2.0}), std::invalid_argument);
}

TEST_CASE("the scalar invariant is constant across states and elements") {
    std::vector<State> states;
    for (std::uint64_t i = 0; i < 3; ++i)
        states.push_back(random_admissible_state(g1, 0, profile_for(g1), 29, i));
    CHECK(casimir_expectation_defect(states, ph) < 1e-10);
    CHECK(casimir_expectation_defect(states, Physics{1.0, 3.7}) < 1e-10);

    const std::vector<GroupElement> elems{Translation{{1.3, 0.0, 0.0}},
                                          Boost{{0.6, 0.0, 0.0}}, TimeShift{0.7},
                                          Central{0.4}};
    CHECK(casimir_commutation_defect(states, elems, ph) < 1e-10);
}

TEST_CASE("trajectories serialize to csv") {
    const State psi = travelling_packet();
    const Trajectory tr = heisenberg_trajectory(psi, 4.0, 4, ph);
    const std::string path =
        (std::filesystem::temp_directory_path() / "galilei_test_traj.csv").string();
    write_trajectory_csv(tr, path);
    std::FILE *f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char header[256] = {0};
    REQUIRE(std::fgets(header, sizeof header, f) != nullptr);
    std::fclose(f);
    CHECK(std::string(header).rfind("time,", 0) == 0);
    std::filesystem::remove(path);
}

} // TEST_SUITE
