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

#include "galilei/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace galilei {

double Grid::dp() const { return 2.0 * std::numbers::pi * hbar / length; }

std::size_t Grid::sites() const {
    std::size_t s = 1;
    for (int i = 0; i < dims; ++i)
        s *= static_cast<std::size_t>(n);
    return s;
}

Grid make_grid(int dims, int n, double length, double hbar) {
    if (dims != 1 && dims != 3)
        throw std::invalid_argument("grid dims must be 1 or 3");
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two, at least 8");
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid length must be positive and finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::invalid_argument("hbar must be positive and finite");
    return Grid{dims, n, length, hbar};
}

bool same_grid(const Grid &a, const Grid &b) {
    return a.dims == b.dims && a.n == b.n && a.length == b.length && a.hbar == b.hbar;
}

std::size_t flatten(const Grid &g, const std::array<int, 3> &k) {
    if (g.dims == 1)
        return static_cast<std::size_t>(k[0]);
    return (static_cast<std::size_t>(k[0]) * g.n + k[1]) * g.n + k[2];
}

std::array<int, 3> unflatten(const Grid &g, std::size_t site) {
    if (g.dims == 1)
        return {static_cast<int>(site), 0, 0};
    const int z = static_cast<int>(site % g.n);
    site /= g.n;
    const int y = static_cast<int>(site % g.n);
    const int x = static_cast<int>(site / g.n);
    return {x, y, z};
}

int wrap_index(int k, int n) {
    int r = k % n;
    return r < 0 ? r + n : r;
}

} // namespace galilei
