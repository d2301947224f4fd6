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

#include <doctest.h>

#include "galilei/observables.hpp"
#include "galilei/random_states.hpp"
#include "galilei/state.hpp"

using namespace galilei;

namespace {
const Grid g1 = make_grid(1, 512, 80.0);
}

TEST_SUITE("state") {

TEST_CASE("gaussian packets are normalized") {
    GaussianSpec spec;
    spec.center = {2.0, 0.0, 0.0};
    spec.momentum = {1.0, 0.0, 0.0};
    spec.width = {1.3, 1.0, 1.0};
    const State psi = gaussian_state(g1, 0, spec);
    CHECK(std::abs(norm(psi) - 1.0) < 1e-14);
}

TEST_CASE("gaussian packets carry the requested moments") {
    GaussianSpec spec;
    spec.center = {-3.0, 0.0, 0.0};
    spec.momentum = {1.7, 0.0, 0.0};
    spec.width = {1.2, 1.0, 1.0};
    const State psi = gaussian_state(g1, 0, spec);
    CHECK(mean_position(psi, 0) == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(mean_momentum(psi, 0) == doctest::Approx(1.7).epsilon(1e-10));
    CHECK(variance_position(psi, 0) == doctest::Approx(1.2 * 1.2).epsilon(1e-10));
    // momentum spread of a minimal-uncertainty packet: hbar/(2 sigma)
    const double sp = 1.0 / (2.0 * 1.2);
    CHECK(variance_momentum(psi, 0) == doctest::Approx(sp * sp).epsilon(1e-10));
}

TEST_CASE("widths below one and a half cells are rejected") {
    GaussianSpec spec;
    spec.width = {1.4 * g1.dx(), 1.0, 1.0};
    CHECK_THROWS_AS(gaussian_state(g1, 0, spec), std::invalid_argument);
    spec.width = {1.5 * g1.dx(), 1.0, 1.0};
    CHECK_NOTHROW(gaussian_state(g1, 0, spec));
}

TEST_CASE("envelopes that leave the box are rejected") {
    GaussianSpec spec;
    spec.center = {38.0, 0.0, 0.0};
    spec.width = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(gaussian_state(g1, 0, spec), std::invalid_argument);
    spec.center = {0.0, 0.0, 0.0};
    spec.momentum = {19.9, 0.0, 0.0}; // cutoff is about 20.1
    CHECK_THROWS_AS(gaussian_state(g1, 0, spec), std::invalid_argument);
}

TEST_CASE("admissibility flags boundary and cutoff mass") {
    GaussianSpec fine;
    fine.width = {1.0, 1.0, 1.0};
    CHECK(admissible(gaussian_state(g1, 0, fine)));

    const TailReport tr = tail_masses(gaussian_state(g1, 0, fine));
    CHECK(tr.boundary_mass < 1e-12);
    CHECK(tr.nyquist_mass < 1e-12);
}

TEST_CASE("inner products are conjugate symmetric and sesquilinear") {
    const StateProfile prof = profile_for(g1);
    const State a = random_admissible_state(g1, 0, prof, 7, 0);
    const State b = random_admissible_state(g1, 0, prof, 7, 1);
    const cplx ab = inner(a, b);
    const cplx ba = inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
    CHECK(std::abs(inner(a, a).imag()) < 1e-14);
}

TEST_CASE("spinor gaussians normalize across components") {
    GaussianSpec spec;
    spec.width = {1.0, 1.0, 1.0};
    spec.spin_amps = {cplx{3.0, 0.0}, cplx{0.0, 4.0}};
    const State psi = gaussian_state(g1, 1, spec);
    CHECK(psi.spin_dim() == 2);
    CHECK(std::abs(norm(psi) - 1.0) < 1e-14);
    // component weights follow |3|^2 : |4i|^2
    double w0 = 0.0, w1 = 0.0;
    for (std::size_t site = 0; site < g1.sites(); ++site) {
        w0 += std::norm(psi.amp[2 * site]);
        w1 += std::norm(psi.amp[2 * site + 1]);
    }
    CHECK(w0 * volume_element(g1) == doctest::Approx(9.0 / 25.0).epsilon(1e-12));
    CHECK(w1 * volume_element(g1) == doctest::Approx(16.0 / 25.0).epsilon(1e-12));
}

TEST_CASE("random admissible states are deterministic in the seed") {
    const StateProfile prof = profile_for(g1);
    const State a = random_admissible_state(g1, 0, prof, 42, 3);
    const State b = random_admissible_state(g1, 0, prof, 42, 3);
    const State c = random_admissible_state(g1, 0, prof, 43, 3);
    CHECK(max_abs_diff(a, b) == 0.0);
    CHECK(max_abs_diff(a, c) > 1e-6);
    CHECK(admissible(a));
}

} // TEST_SUITE
