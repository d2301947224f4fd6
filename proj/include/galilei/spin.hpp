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
 * @file spin.hpp
 * SU(2) elements as unit quaternions, their SO(3) images, and the spin-s
 * rotation matrices acting on the internal index.
 *
 * Spin basis ordering is descending projection: row r of a (2s+1) block
 * carries m = s - r. A rotation by theta about z is then
 * diag(exp(-i s theta), ..., exp(+i s theta)).
 *
 * Quaternions (w, x, y, z) and (-w, -x, -y, -z) map to the same SO(3)
 * rotation but to rotation blocks differing by (-1)^(2s); that sign is the
 * double cover and is deliberately preserved.
 */

#pragma once

#include <array>
#include <complex>
#include <vector>

namespace galilei {

struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Dense square complex matrix, row-major.
struct SpinMatrix {
    int dim = 0;
    std::vector<std::complex<double>> m; // m[r * dim + c]

    std::complex<double> &at(int r, int c) { return m[static_cast<std::size_t>(r) * dim + c]; }
    const std::complex<double> &at(int r, int c) const {
        return m[static_cast<std::size_t>(r) * dim + c];
    }
};

Quaternion quat_normalize(const Quaternion &q);
Quaternion quat_mul(const Quaternion &a, const Quaternion &b);
Quaternion quat_conj(const Quaternion &q);

/// Unit quaternion for a right-handed rotation by angle about axis.
Quaternion quat_axis_angle(const std::array<double, 3> &axis, double angle);

/// The exact SU(2) image of a full turn: (-1, 0, 0, 0).
Quaternion quat_full_turn();

/// SO(3) rotation matrix of a unit quaternion.
Mat3 rotation_matrix(const Quaternion &q);

std::array<double, 3> mat3_apply(const Mat3 &r, const std::array<double, 3> &v);
Mat3 mat3_transpose(const Mat3 &r);

struct RotationMatrixPair {
    Mat3 spatial;        // SO(3) action on coordinates and momenta
    SpinMatrix internal; // spin-s block, unitary
};

/// Spin-s rotation block for the SU(2) element q (two_s = 2s).
SpinMatrix spin_rotation(int two_s, const Quaternion &q);

/// Spatial matrix and spin block of one group rotation, computed together.
RotationMatrixPair wigner_pair(int two_s, const Quaternion &q);

/// Spin generators (S_x, S_y, S_z) scaled by hbar, built from ladder operators.
std::array<SpinMatrix, 3> spin_generators(int two_s, double hbar);

SpinMatrix spin_multiply(const SpinMatrix &a, const SpinMatrix &b);
SpinMatrix spin_adjoint(const SpinMatrix &a);
double spin_max_abs_diff(const SpinMatrix &a, const SpinMatrix &b);
SpinMatrix spin_identity(int dim);

/// Max deviation of a^dagger a from the identity.
double unitarity_defect(const SpinMatrix &a);

/// The 24 proper rotations that map the cubic grid onto itself, as quaternions.
const std::vector<Quaternion> &octahedral_rotations();

/**
 * Snap the SO(3) matrix of q to a signed permutation acting on axis indices.
 * Returns false when q does not preserve the grid. On success perm[i] is the
 * source axis feeding output axis i and sign[i] its orientation.
 */
bool grid_aligned_rotation(const Quaternion &q, std::array<int, 3> &perm,
                           std::array<int, 3> &sign);

} // namespace galilei
