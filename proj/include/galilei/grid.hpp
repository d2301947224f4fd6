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
 * @file grid.hpp
 * Periodic simulation box shared by every wavefunction in the laboratory.
 *
 * Coordinates and momenta are both stored in ascending order:
 *   x_k = -L/2 + k dx          for k in [0, n)
 *   p_q = dp * (q - n/2)       for q in [0, n)
 * with dx = L/n and dp = 2 pi hbar / L, so dx * dp = 2 pi hbar / n.
 *
 * n must be a power of two and at least 8. That keeps n/2 even, which the
 * Fourier layer exploits to express the centering phase as an exact sign.
 */

#pragma once

#include <array>
#include <cstddef>

namespace galilei {

struct Grid {
    int dims = 1;        // 1 or 3
    int n = 0;           // sites per axis
    double length = 0.0; // box edge length L
    double hbar = 1.0;

    double dx() const { return length / n; }
    double dp() const;

    /// Total site count n^dims.
    std::size_t sites() const;

    /// Coordinate of site k along one axis.
    double coord(int k) const { return -0.5 * length + k * dx(); }

    /// Signed momentum index for storage slot q.
    int signed_index(int q) const { return q - n / 2; }

    /// Momentum value of storage slot q along one axis.
    double momentum(int q) const { return dp() * signed_index(q); }

    /// Largest representable |p| (the Nyquist momentum, pi hbar / dx).
    double momentum_cutoff() const { return dp() * (n / 2); }
};

/// Validating constructor. Throws std::invalid_argument on a bad box.
Grid make_grid(int dims, int n, double length, double hbar = 1.0);

bool same_grid(const Grid &a, const Grid &b);

/// Row-major site index of a (kx, ky, kz) triple; unused axes must be 0.
std::size_t flatten(const Grid &g, const std::array<int, 3> &k);

/// Inverse of flatten.
std::array<int, 3> unflatten(const Grid &g, std::size_t site);

/// Wrap an integer site offset into [0, n).
int wrap_index(int k, int n);

} // namespace galilei
