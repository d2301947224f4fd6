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
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "galilei/localization.hpp"
#include "galilei/random_states.hpp"

using namespace galilei;

namespace {

const Grid g1 = make_grid(1, 512, 80.0);
const Physics ph{1.0, 0.0};

State sample1(std::uint64_t index) {
    return random_admissible_state(g1, 0, profile_for(g1), 17, index);
}

} // namespace

TEST_SUITE("localization") {

TEST_CASE("interval probability matches the gaussian error function") {
    const Grid ge = make_grid(1, 32768, 80.0);
    GaussianSpec spec;
    spec.center = {0.5, 0.0, 0.0};
    spec.width = {1.0, 1.0, 1.0};
    const State psi = gaussian_state(ge, 0, spec);
    const Region ball = ball_region(ge, {0.3, 0.0, 0.0}, 3.0);
    const double prob = povm_prob(psi, ball, sharp_kernel());
    const double lo = ge.coord(static_cast<int>(ball.sites.front()));
    const double hi = ge.coord(static_cast<int>(ball.sites.back()));
    const double s = std::numbers::sqrt2;
    const double oracle = 0.5 * (std::erf((hi + 0.5 * ge.dx() - 0.5) / s) -
                                 std::erf((lo - 0.5 * ge.dx() - 0.5) / s));
    CHECK(std::abs(prob - oracle) < 1e-8);
}

TEST_CASE("box regions are half open and lattice sized") {
    // [-1, 1) at dx = 80/512 covers ceil/round boundaries consistently:
    // sites with -1 <= x < 1
    const Region box = box_region(g1, {-1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
    for (std::size_t site : box.sites) {
        const double x = g1.coord(static_cast<int>(site));
        CHECK(x >= -1.0);
        CHECK(x < 1.0);
    }
    // interval length over dx, within one cell
    const double expected = 2.0 / g1.dx();
    CHECK(std::abs(static_cast<double>(box.sites.size()) - expected) <= 1.0);
}

TEST_CASE("disjoint regions add probabilities") {
    const State psi = sample1(0);
    const Region a = ball_region(g1, {-6.0, 0.0, 0.0}, 2.0);
    const Region b = ball_region(g1, {6.0, 0.0, 0.0}, 2.5);
    REQUIRE(regions_disjoint(a, b));
    const SmearKernel k = sharp_kernel();
    CHECK(std::abs(povm_prob(psi, region_union(a, b), k) - povm_prob(psi, a, k) -
                   povm_prob(psi, b, k)) < 1e-14);
}

TEST_CASE("region translation moves sites by whole steps") {
    const Region b = ball_region(g1, {0.0, 0.0, 0.0}, 1.0);
    const Region shifted = translate_region(g1, b, {10, 0, 0});
    REQUIRE(shifted.sites.size() == b.sites.size());
    for (std::size_t i = 0; i < b.sites.size(); ++i)
        CHECK(shifted.sites[i] == b.sites[i] + 10);
}

TEST_CASE("kernels snap to lattice nodes and validate weights") {
    CHECK_NOTHROW(make_kernel(g1, {{{0.0, 0.0, 0.0}, 1.0}}));
    CHECK_NOTHROW(make_kernel(g1, {{{3.0 * g1.dx(), 0.0, 0.0}, 0.5},
                                   {{-2.0 * g1.dx(), 0.0, 0.0}, 0.5}}));
    // off-lattice offset
    CHECK_THROWS_AS(make_kernel(g1, {{{0.4 * g1.dx(), 0.0, 0.0}, 1.0}}),
                    std::invalid_argument);
    // weights must be positive and sum to one
    CHECK_THROWS_AS(make_kernel(g1, {{{0.0, 0.0, 0.0}, -0.2},
                                     {{g1.dx(), 0.0, 0.0}, 1.2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_kernel(g1, {{{0.0, 0.0, 0.0}, 0.7}}), std::invalid_argument);
    CHECK_THROWS_AS(make_kernel(g1, {}), std::invalid_argument);
}

TEST_CASE("a two atom kernel on a small region has norm one half") {
    const Region small = ball_region(g1, {0.0, 0.0, 0.0}, 5.5 * g1.dx());
    const SmearKernel k = make_kernel(
        g1, {{{0.0, 0.0, 0.0}, 0.5}, {{41.0 * g1.dx(), 0.0, 0.0}, 0.5}});
    CHECK(std::abs(povm_norm(g1, small, k) - 0.5) < 1e-15);
}

TEST_CASE("smeared probabilities match the brute force double sum") {
    const State psi = sample1(1);
    const Region box = box_region(g1, {-4.0, 0.0, 0.0}, {6.5, 0.0, 0.0});
    const SmearKernel k = make_kernel(g1, {{{0.0, 0.0, 0.0}, 0.5},
                                           {{29.0 * g1.dx(), 0.0, 0.0}, 0.3},
                                           {{-23.0 * g1.dx(), 0.0, 0.0}, 0.2}});
    CHECK(std::abs(povm_prob(psi, box, k) - povm_prob_bruteforce(psi, box, k)) < 1e-14);
}

TEST_CASE("sharp kernels reach operator norm one on any region") {
    const Region box = box_region(g1, {2.0, 0.0, 0.0}, {9.0, 0.0, 0.0});
    CHECK(povm_norm(g1, box, sharp_kernel()) == 1.0);
}

TEST_CASE("focusing concentrates all but epsilon of the mass") {
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const FocusResult fr = focusing_state(g1, 0, 2.0, eps);
        CHECK(fr.achieved >= 1.0 - eps);
        CHECK(std::abs(norm(fr.state) - 1.0) < 1e-13);
    }
}

TEST_CASE("focusing validates its arguments") {
    CHECK_THROWS_AS(focusing_state(g1, 0, 4.0 * g1.dx(), 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(focusing_state(g1, 0, 2.0, 0.7), std::invalid_argument);
    CHECK_THROWS_AS(focusing_state(g1, 0, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("translation covariance moves the region with the state") {
    const State psi = sample1(2);
    const Region b = ball_region(g1, {1.0, 0.0, 0.0}, 2.5);
    const Translation tr{lattice_translation(g1, {9, 0, 0})};
    CHECK(covariance_defect(psi, b, tr, sharp_kernel(), ph) < 1e-13);
}

TEST_CASE("boosts leave position statistics untouched") {
    const State psi = sample1(3);
    const Region b = ball_region(g1, {1.0, 0.0, 0.0}, 2.5);
    CHECK(covariance_defect(psi, b, Boost{{1.1, 0.0, 0.0}}, sharp_kernel(), ph) < 1e-13);
}

TEST_CASE("rotation covariance requires grid alignment") {
    const Grid g3 = make_grid(3, 32, 12.0);
    const State psi = random_admissible_state(g3, 0, profile_for(g3), 17, 4);
    const Region b = ball_region(g3, {0.75, -0.375, 0.375}, 1.6);
    const Quaternion good = octahedral_rotations()[2];
    CHECK(covariance_defect(psi, b, Rotation{good}, sharp_kernel(), ph) < 1e-13);
    const Quaternion bad = quat_axis_angle({0.0, 0.0, 1.0}, 0.4);
    CHECK_THROWS_AS(rotate_region(g3, b, bad), std::invalid_argument);
}

} // TEST_SUITE
