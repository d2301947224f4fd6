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

#include "galilei/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "galilei/fourier.hpp"

namespace galilei {

State make_state(const Grid &grid, int two_s) {
    if (two_s < 0)
        throw std::invalid_argument("two_s must be nonnegative");
    State s;
    s.grid = grid;
    s.two_s = two_s;
    s.amp.assign(grid.sites() * static_cast<std::size_t>(two_s + 1), cplx{0.0, 0.0});
    return s;
}

double volume_element(const Grid &grid) {
    double v = 1.0;
    for (int i = 0; i < grid.dims; ++i)
        v *= grid.dx();
    return v;
}

cplx inner(const State &a, const State &b) {
    if (!same_grid(a.grid, b.grid) || a.two_s != b.two_s)
        throw std::invalid_argument("inner product requires matching grid and spin");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        acc += std::conj(a.amp[i]) * b.amp[i];
    return acc * volume_element(a.grid);
}

double norm(const State &a) {
    double acc = 0.0;
    for (const cplx &c : a.amp)
        acc += std::norm(c);
    return std::sqrt(acc * volume_element(a.grid));
}

void normalize(State &a) {
    const double n = norm(a);
    if (!(n > 0.0))
        throw std::invalid_argument("cannot normalize the zero state");
    const double inv = 1.0 / n;
    for (cplx &c : a.amp)
        c *= inv;
}

double max_abs_diff(const State &a, const State &b) {
    if (a.amp.size() != b.amp.size())
        throw std::invalid_argument("state size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        m = std::max(m, std::abs(a.amp[i] - b.amp[i]));
    return m;
}

double norm_diff(const State &a, const State &b) {
    if (a.amp.size() != b.amp.size())
        throw std::invalid_argument("state size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        acc += std::norm(a.amp[i] - b.amp[i]);
    return std::sqrt(acc * volume_element(a.grid));
}

State gaussian_state(const Grid &grid, int two_s, const GaussianSpec &spec) {
    const int sd = two_s + 1;
    std::vector<cplx> chi = spec.spin_amps;
    if (chi.empty()) {
        chi.assign(static_cast<std::size_t>(sd), cplx{0.0, 0.0});
        chi[0] = 1.0;
    }
    if (static_cast<int>(chi.size()) != sd)
        throw std::invalid_argument("spin amplitude count must equal 2s+1");
    double chin = 0.0;
    for (const cplx &c : chi)
        chin += std::norm(c);
    if (!(chin > 0.0))
        throw std::invalid_argument("spin amplitudes must not all vanish");
    chin = 1.0 / std::sqrt(chin);
    for (cplx &c : chi)
        c *= chin;

    for (int i = 0; i < grid.dims; ++i) {
        const double s = spec.width[i];
        if (!(s >= 1.5 * grid.dx()))
            throw std::invalid_argument("gaussian width narrower than the grid can resolve");
        if (std::abs(spec.center[i]) + 5.0 * s > 0.5 * grid.length)
            throw std::invalid_argument("gaussian envelope leaves the box");
        const double sp = 0.5 * grid.hbar / s; // momentum standard deviation
        if (std::abs(spec.momentum[i]) + 5.0 * sp > grid.momentum_cutoff())
            throw std::invalid_argument("gaussian momentum envelope exceeds the cutoff");
    }

    State out = make_state(grid, two_s);
    const std::size_t ns = grid.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(grid, site);
        double quad = 0.0, phase = 0.0;
        for (int i = 0; i < grid.dims; ++i) {
            const double x = grid.coord(k[i]);
            const double d = x - spec.center[i];
            quad += d * d / (4.0 * spec.width[i] * spec.width[i]);
            phase += spec.momentum[i] * x / grid.hbar;
        }
        const cplx env = std::exp(cplx{-quad, phase});
        for (int s = 0; s < sd; ++s)
            out.amp[site * sd + s] = env * chi[s];
    }
    normalize(out);
    return out;
}

TailReport tail_masses(const State &psi) {
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    const double dv = volume_element(g);
    TailReport rep;

    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        bool edge = false;
        for (int i = 0; i < g.dims; ++i)
            edge = edge || k[i] == 0 || k[i] == g.n - 1;
        if (!edge)
            continue;
        double m = 0.0;
        for (int s = 0; s < sd; ++s)
            m += std::norm(psi.amp[site * sd + s]);
        rep.boundary_mass += m * dv;
    }

    const std::vector<cplx> mom = to_momentum(psi);
    double dvp = 1.0;
    for (int i = 0; i < g.dims; ++i)
        dvp *= g.dp();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto q = unflatten(g, site);
        bool edge = false;
        for (int i = 0; i < g.dims; ++i)
            edge = edge || q[i] == 0 || q[i] == g.n - 1;
        if (!edge)
            continue;
        double m = 0.0;
        for (int s = 0; s < sd; ++s)
            m += std::norm(mom[site * sd + s]);
        rep.nyquist_mass += m * dvp;
    }
    return rep;
}

bool admissible(const State &psi, double tol) {
    const TailReport rep = tail_masses(psi);
    return rep.boundary_mass <= tol && rep.nyquist_mass <= tol;
}

void require_admissible(const State &psi, double tol) {
    const TailReport rep = tail_masses(psi);
    if (rep.boundary_mass > tol)
        throw std::invalid_argument("state touches the box boundary");
    if (rep.nyquist_mass > tol)
        throw std::invalid_argument("state touches the momentum cutoff");
}

} // namespace galilei
