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
#include <random>
#include <set>

#include <doctest.h>

#include "galilei/spin.hpp"

using namespace galilei;

namespace {

SpinMatrix negated(const SpinMatrix &a) {
    SpinMatrix out = a;
    for (auto &e : out.m)
        e = -e;
    return out;
}

SpinMatrix commutator(const SpinMatrix &a, const SpinMatrix &b) {
    const SpinMatrix ab = spin_multiply(a, b);
    const SpinMatrix ba = spin_multiply(b, a);
    SpinMatrix out = ab;
    for (std::size_t i = 0; i < out.m.size(); ++i)
        out.m[i] -= ba.m[i];
    return out;
}

} // namespace

TEST_SUITE("spin") {

TEST_CASE("a full turn is minus one on half-integer spin, exactly") {
    const Quaternion turn = quat_full_turn();
    CHECK(spin_max_abs_diff(spin_rotation(1, turn), negated(spin_identity(2))) == 0.0);
    CHECK(spin_max_abs_diff(spin_rotation(3, turn), negated(spin_identity(4))) == 0.0);
    CHECK(spin_max_abs_diff(spin_rotation(0, turn), spin_identity(1)) == 0.0);
    CHECK(spin_max_abs_diff(spin_rotation(2, turn), spin_identity(3)) == 0.0);
}

TEST_CASE("two full turns restore the identity") {
    const Quaternion two = quat_mul(quat_full_turn(), quat_full_turn());
    for (int two_s : {0, 1, 2, 3})
        CHECK(spin_max_abs_diff(spin_rotation(two_s, two),
                                spin_identity(two_s + 1)) < 1e-15);
}

TEST_CASE("rotation blocks are unitary") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Quaternion q = quat_normalize({d(gen), d(gen), d(gen), d(gen)});
        for (int two_s : {0, 1, 2, 3, 4})
            CHECK(unitarity_defect(spin_rotation(two_s, q)) < 1e-13);
    }
}

TEST_CASE("generators satisfy the angular momentum algebra") {
    for (int two_s : {1, 2, 3}) {
        const auto s = spin_generators(two_s, 1.0);
        const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        for (const auto &t : cyc) {
            SpinMatrix lhs = commutator(s[static_cast<std::size_t>(t[0])],
                                        s[static_cast<std::size_t>(t[1])]);
            SpinMatrix rhs = s[static_cast<std::size_t>(t[2])];
            for (auto &e : rhs.m)
                e *= std::complex<double>{0.0, 1.0};
            CHECK(spin_max_abs_diff(lhs, rhs) < 1e-14);
        }
    }
}

TEST_CASE("s_z of spin one half has eigenvalues plus and minus hbar over two") {
    const auto s = spin_generators(1, 2.0); // hbar = 2 makes them plus minus 1
    CHECK(std::abs(s[2].at(0, 0) - std::complex<double>{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(s[2].at(1, 1) - std::complex<double>{-1.0, 0.0}) < 1e-15);
    CHECK(std::abs(s[2].at(0, 1)) == 0.0);
}

TEST_CASE("axis-angle rotations match the classical matrix") {
    const Quaternion q = quat_axis_angle({0.0, 0.0, 1.0}, std::numbers::pi / 2.0);
    const Mat3 r = rotation_matrix(q);
    // a quarter turn around z sends x to y
    const std::array<double, 3> x{1.0, 0.0, 0.0};
    const auto rx = mat3_apply(r, x);
    CHECK(rx[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rx[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rx[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("the octahedral set has 24 distinct rotations, all grid aligned") {
    const auto &oct = octahedral_rotations();
    CHECK(oct.size() == 24);
    std::set<std::array<int, 9>> distinct;
    for (const Quaternion &q : oct) {
        const Mat3 r = rotation_matrix(q);
        std::array<int, 9> key{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                key[static_cast<std::size_t>(3 * i + j)] =
                    static_cast<int>(std::lround(r[static_cast<std::size_t>(i)]
                                                  [static_cast<std::size_t>(j)]));
        distinct.insert(key);

        std::array<int, 3> perm{};
        std::array<int, 3> sign{};
        CHECK(grid_aligned_rotation(q, perm, sign));
        // the reported permutation and signs reproduce the matrix action
        const std::array<double, 3> v{1.0, 2.0, 3.0};
        const auto rv = mat3_apply(r, v);
        for (int i = 0; i < 3; ++i)
            CHECK(rv[static_cast<std::size_t>(i)] ==
                  doctest::Approx(sign[static_cast<std::size_t>(i)] *
                                  v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])])
                      .epsilon(1e-13));
    }
    CHECK(distinct.size() == 24);
}

TEST_CASE("a generic rotation is not grid aligned") {
    const Quaternion q = quat_axis_angle({0.0, 0.0, 1.0}, 0.3);
    std::array<int, 3> perm{};
    std::array<int, 3> sign{};
    CHECK_FALSE(grid_aligned_rotation(q, perm, sign));
}

TEST_CASE("wigner pairs couple the spatial and internal actions") {
    const Quaternion q = octahedral_rotations()[5];
    const RotationMatrixPair pair = wigner_pair(3, q);
    CHECK(unitarity_defect(pair.internal) < 1e-14);
    const Mat3 direct = rotation_matrix(q);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(pair.spatial[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  doctest::Approx(direct[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)])
                      .epsilon(1e-14));
}

} // TEST_SUITE
