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

#include "galilei/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

constexpr int max_two_s = 12; // keeps every factorial below exact double range

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Integer power with the 0^0 = 1 convention the expansion needs.
std::complex<double> cpow_int(std::complex<double> base, int e) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

void check_two_s(int two_s) {
    if (two_s < 0 || two_s > max_two_s)
        throw std::invalid_argument("unsupported spin magnitude");
}

} // namespace

Quaternion quat_normalize(const Quaternion &q) {
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    if (!(n > 0.0))
        throw std::invalid_argument("zero quaternion");
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Quaternion quat_mul(const Quaternion &a, const Quaternion &b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion quat_conj(const Quaternion &q) { return {q.w, -q.x, -q.y, -q.z}; }

Quaternion quat_axis_angle(const std::array<double, 3> &axis, double angle) {
    const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(n > 0.0))
        throw std::invalid_argument("rotation axis must be nonzero");
    const double s = std::sin(0.5 * angle) / n;
    return {std::cos(0.5 * angle), s * axis[0], s * axis[1], s * axis[2]};
}

Quaternion quat_full_turn() { return {-1.0, 0.0, 0.0, 0.0}; }

Mat3 rotation_matrix(const Quaternion &qq) {
    const Quaternion q = quat_normalize(qq);
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    return {{{1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)},
             {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)},
             {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)}}};
}

std::array<double, 3> mat3_apply(const Mat3 &r, const std::array<double, 3> &v) {
    std::array<double, 3> out{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        out[i] = r[i][0] * v[0] + r[i][1] * v[1] + r[i][2] * v[2];
    return out;
}

Mat3 mat3_transpose(const Mat3 &r) {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t[i][j] = r[j][i];
    return t;
}

// Spin block by substitution in the degree-2s polynomial model: column c is
// the expansion of (a z1 + c z2)^(n-c) (b z1 + d z2)^c in the monomial basis,
// with [[a, b], [c, d]] the defining spin-1/2 block of the quaternion.
SpinMatrix spin_rotation(int two_s, const Quaternion &qq) {
    check_two_s(two_s);
    const Quaternion q = quat_normalize(qq);
    const std::complex<double> a{q.w, -q.z};
    const std::complex<double> b{-q.y, -q.x};
    const std::complex<double> c{q.y, -q.x};
    const std::complex<double> d{q.w, q.z};

    const int n = two_s;
    SpinMatrix out;
    out.dim = n + 1;
    out.m.assign(static_cast<std::size_t>(out.dim) * out.dim, {0.0, 0.0});
    for (int col = 0; col <= n; ++col) {
        for (int row = 0; row <= n; ++row) {
            // coefficient of z1^(n-row) z2^row in (a z1 + c z2)^(n-col) (b z1 + d z2)^col
            std::complex<double> acc{0.0, 0.0};
            for (int i = 0; i <= n - col; ++i) {
                const int j = n - row - i; // power of z1 taken from the second factor
                if (j < 0 || j > col)
                    continue;
                acc += binomial(n - col, i) * binomial(col, j) * cpow_int(a, i) *
                       cpow_int(c, n - col - i) * cpow_int(b, j) * cpow_int(d, col - j);
            }
            const double scale =
                std::sqrt(factorial(n - row) * factorial(row)) /
                std::sqrt(factorial(n - col) * factorial(col));
            out.at(row, col) = scale * acc;
        }
    }
    return out;
}

RotationMatrixPair wigner_pair(int two_s, const Quaternion &q) {
    return {rotation_matrix(q), spin_rotation(two_s, q)};
}

std::array<SpinMatrix, 3> spin_generators(int two_s, double hbar) {
    check_two_s(two_s);
    const int dim = two_s + 1;
    const double s = 0.5 * two_s;
    SpinMatrix sz, sp;
    sz.dim = sp.dim = dim;
    sz.m.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
    sp.m.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
    for (int r = 0; r < dim; ++r) {
        const double m = s - r;
        sz.at(r, r) = hbar * m;
        if (r >= 1) // raising: row r-1 holds m+1
            sp.at(r - 1, r) = hbar * std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
    const SpinMatrix sm = spin_adjoint(sp);
    SpinMatrix sx, sy;
    sx.dim = sy.dim = dim;
    sx.m.resize(sp.m.size());
    sy.m.resize(sp.m.size());
    for (std::size_t i = 0; i < sp.m.size(); ++i) {
        sx.m[i] = 0.5 * (sp.m[i] + sm.m[i]);
        sy.m[i] = std::complex<double>{0.0, -0.5} * (sp.m[i] - sm.m[i]);
    }
    return {sx, sy, sz};
}

SpinMatrix spin_multiply(const SpinMatrix &a, const SpinMatrix &b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("spin matrix dimension mismatch");
    SpinMatrix out;
    out.dim = a.dim;
    out.m.assign(a.m.size(), {0.0, 0.0});
    for (int r = 0; r < a.dim; ++r)
        for (int k = 0; k < a.dim; ++k) {
            const std::complex<double> f = a.at(r, k);
            if (f == std::complex<double>{0.0, 0.0})
                continue;
            for (int c = 0; c < a.dim; ++c)
                out.at(r, c) += f * b.at(k, c);
        }
    return out;
}

SpinMatrix spin_adjoint(const SpinMatrix &a) {
    SpinMatrix out;
    out.dim = a.dim;
    out.m.resize(a.m.size());
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c)
            out.at(r, c) = std::conj(a.at(c, r));
    return out;
}

double spin_max_abs_diff(const SpinMatrix &a, const SpinMatrix &b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("spin matrix dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.m.size(); ++i)
        m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

SpinMatrix spin_identity(int dim) {
    SpinMatrix out;
    out.dim = dim;
    out.m.assign(static_cast<std::size_t>(dim) * dim, {0.0, 0.0});
    for (int r = 0; r < dim; ++r)
        out.at(r, r) = 1.0;
    return out;
}

double unitarity_defect(const SpinMatrix &a) {
    return spin_max_abs_diff(spin_multiply(spin_adjoint(a), a), spin_identity(a.dim));
}

const std::vector<Quaternion> &octahedral_rotations() {
    static const std::vector<Quaternion> table = [] {
        const double c = std::sqrt(0.5);
        std::vector<Quaternion> t;
        t.push_back({1, 0, 0, 0});
        for (int axis = 0; axis < 3; ++axis)
            for (double sgn : {1.0, -1.0}) {
                Quaternion q{c, 0, 0, 0};
                (axis == 0 ? q.x : axis == 1 ? q.y : q.z) = sgn * c;
                t.push_back(q);
            }
        t.push_back({0, 1, 0, 0});
        t.push_back({0, 0, 1, 0});
        t.push_back({0, 0, 0, 1});
        for (double sx : {1.0, -1.0})
            for (double sy : {1.0, -1.0})
                for (double sz : {1.0, -1.0})
                    t.push_back({0.5, 0.5 * sx, 0.5 * sy, 0.5 * sz});
        t.push_back({0, c, c, 0});
        t.push_back({0, c, -c, 0});
        t.push_back({0, c, 0, c});
        t.push_back({0, c, 0, -c});
        t.push_back({0, 0, c, c});
        t.push_back({0, 0, c, -c});
        return t;
    }();
    return table;
}

bool grid_aligned_rotation(const Quaternion &q, std::array<int, 3> &perm,
                           std::array<int, 3> &sign) {
    const Mat3 r = rotation_matrix(q);
    std::array<bool, 3> used{false, false, false};
    for (int i = 0; i < 3; ++i) {
        int hit = -1;
        for (int j = 0; j < 3; ++j) {
            const double v = std::abs(r[i][j]);
            if (v > 1.0 - 1e-9) {
                hit = j;
            } else if (v > 1e-9) {
                return false;
            }
        }
        if (hit < 0 || used[hit])
            return false;
        used[hit] = true;
        perm[i] = hit;
        sign[i] = r[i][hit] > 0.0 ? 1 : -1;
    }
    return true;
}

} // namespace galilei
