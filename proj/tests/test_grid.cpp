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

#include "galilei/grid.hpp"

using namespace galilei;

TEST_SUITE("grid") {

TEST_CASE("coordinates start at -L/2 and step by dx") {
    const Grid g = make_grid(1, 512, 80.0);
    CHECK(g.dx() == 0.15625); // 80/512 is exactly representable
    CHECK(g.coord(0) == -40.0);
    CHECK(g.coord(256) == 0.0);
    CHECK(g.coord(511) == doctest::Approx(40.0 - g.dx()).epsilon(1e-15));
}

TEST_CASE("momentum slots are centered and step by dp") {
    const Grid g = make_grid(1, 512, 80.0);
    CHECK(g.momentum(256) == 0.0);
    CHECK(g.signed_index(256) == 0);
    CHECK(g.signed_index(0) == -256);
    CHECK(g.momentum(257) == doctest::Approx(g.dp()).epsilon(1e-15));
    CHECK(g.dp() == doctest::Approx(2.0 * std::numbers::pi / 80.0).epsilon(1e-15));
    CHECK(g.momentum_cutoff() == doctest::Approx(256 * g.dp()).epsilon(1e-15));
}

TEST_CASE("dx dp n equals 2 pi hbar") {
    for (double hbar : {1.0, 0.5, 2.25}) {
        const Grid g = make_grid(1, 256, 37.5, hbar);
        CHECK(std::abs(g.dx() * g.dp() * g.n - 2.0 * std::numbers::pi * hbar) < 1e-13);
    }
}

TEST_CASE("wrap_index is the positive residue") {
    CHECK(wrap_index(-1, 8) == 7);
    CHECK(wrap_index(8, 8) == 0);
    CHECK(wrap_index(17, 8) == 1);
    CHECK(wrap_index(-17, 8) == 7);
    CHECK(wrap_index(0, 8) == 0);
}

TEST_CASE("flatten and unflatten are inverse on a 3d grid") {
    const Grid g = make_grid(3, 8, 12.0);
    for (std::size_t site = 0; site < g.sites(); ++site) {
        const auto k = unflatten(g, site);
        CHECK(flatten(g, k) == site);
        CHECK(k[0] >= 0);
        CHECK(k[0] < g.n);
    }
    CHECK(g.sites() == 512);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_grid(2, 64, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 12, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 4, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 64, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 64, 10.0, 0.0), std::invalid_argument);
}

TEST_CASE("same_grid compares every field") {
    const Grid a = make_grid(1, 64, 10.0);
    CHECK(same_grid(a, make_grid(1, 64, 10.0)));
    CHECK_FALSE(same_grid(a, make_grid(1, 128, 10.0)));
    CHECK_FALSE(same_grid(a, make_grid(1, 64, 20.0)));
    CHECK_FALSE(same_grid(a, make_grid(1, 64, 10.0, 2.0)));
}

} // TEST_SUITE
