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

#include "galilei/momentum_povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "galilei/fourier.hpp"
#include "galilei/observables.hpp"

namespace galilei {

namespace {

// Momentum probability mass per slot, summed over spin, volume element folded in.
std::vector<double> slot_masses(const State &psi) {
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    const std::vector<cplx> mom = to_momentum(psi);
    double dvp = 1.0;
    for (int i = 0; i < g.dims; ++i)
        dvp *= g.dp();
    std::vector<double> w(g.sites());
    for (std::size_t slot = 0; slot < w.size(); ++slot) {
        double m = 0.0;
        for (int s = 0; s < sd; ++s)
            m += std::norm(mom[slot * sd + s]);
        w[slot] = m * dvp;
    }
    return w;
}

std::array<int, 3> momentum_steps(const Grid &g, const std::array<double, 3> &shift) {
    std::array<int, 3> steps{0, 0, 0};
    for (int i = 0; i < g.dims; ++i) {
        const double raw = shift[i] / g.dp();
        const double snapped = std::round(raw);
        if (std::abs(raw - snapped) > 1e-9)
            throw std::invalid_argument("shift does not sit on the momentum lattice");
        steps[i] = static_cast<int>(snapped);
    }
    return steps;
}

std::size_t shifted_slot(const Grid &g, std::size_t slot, const std::array<int, 3> &steps) {
    auto q = unflatten(g, slot);
    for (int i = 0; i < g.dims; ++i)
        q[i] = wrap_index(q[i] + steps[i], g.n);
    return flatten(g, q);
}

} // namespace

MomentumRegion momentum_box(const Grid &g, const std::array<double, 3> &lo,
                            const std::array<double, 3> &hi) {
    MomentumRegion r;
    const std::size_t ns = g.sites();
    for (std::size_t slot = 0; slot < ns; ++slot) {
        const auto q = unflatten(g, slot);
        bool in = true;
        for (int i = 0; i < g.dims && in; ++i) {
            const double p = g.momentum(q[i]);
            in = lo[i] <= p && p < hi[i];
        }
        if (in)
            r.slots.push_back(slot);
    }
    return r;
}

MomentumRegion momentum_ball(const Grid &g, const std::array<double, 3> &center, double radius) {
    MomentumRegion r;
    const double r2 = radius * radius;
    const std::size_t ns = g.sites();
    for (std::size_t slot = 0; slot < ns; ++slot) {
        const auto q = unflatten(g, slot);
        double d2 = 0.0;
        for (int i = 0; i < g.dims; ++i) {
            const double d = g.momentum(q[i]) - center[i];
            d2 += d * d;
        }
        if (d2 <= r2)
            r.slots.push_back(slot);
    }
    return r;
}

MomentumRegion shift_momentum_region(const Grid &g, const MomentumRegion &r,
                                     const std::array<int, 3> &steps) {
    MomentumRegion out;
    out.slots.reserve(r.slots.size());
    for (std::size_t slot : r.slots)
        out.slots.push_back(shifted_slot(g, slot, steps));
    std::sort(out.slots.begin(), out.slots.end());
    return out;
}

MomentumRegion rotate_momentum_region(const Grid &g, const MomentumRegion &r,
                                      const Quaternion &u) {
    std::array<int, 3> perm, sign;
    if (!grid_aligned_rotation(u, perm, sign))
        throw std::invalid_argument("rotation is not grid aligned");
    MomentumRegion out;
    out.slots.reserve(r.slots.size());
    for (std::size_t slot : r.slots) {
        const auto q = unflatten(g, slot);
        std::array<int, 3> qq{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const int src = q[perm[i]];
            qq[i] = sign[i] > 0 ? src : (g.n - src) % g.n;
        }
        out.slots.push_back(flatten(g, qq));
    }
    std::sort(out.slots.begin(), out.slots.end());
    return out;
}

double momentum_prob(const State &psi, const MomentumRegion &r) {
    const std::vector<double> w = slot_masses(psi);
    double acc = 0.0;
    for (std::size_t slot : r.slots)
        acc += w[slot];
    return acc;
}

SmearKernel make_momentum_kernel(const Grid &g, const std::vector<SmearKernel::Atom> &atoms) {
    if (atoms.empty())
        throw std::invalid_argument("kernel needs at least one atom");
    double total = 0.0;
    SmearKernel k;
    for (const auto &atom : atoms) {
        if (!(atom.weight > 0.0))
            throw std::invalid_argument("kernel weights must be positive");
        const auto steps = momentum_steps(g, atom.offset);
        SmearKernel::Atom snapped;
        for (int i = 0; i < g.dims; ++i)
            snapped.offset[i] = steps[i] * g.dp();
        snapped.weight = atom.weight;
        k.atoms.push_back(snapped);
        total += atom.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("kernel weights must sum to one");
    return k;
}

double smeared_momentum_prob(const State &psi, const MomentumRegion &r, const SmearKernel &k) {
    const Grid &g = psi.grid;
    const std::vector<double> w = slot_masses(psi);
    std::vector<double> f(g.sites(), 0.0);
    for (const auto &atom : k.atoms) {
        const auto steps = momentum_steps(g, atom.offset);
        std::array<int, 3> neg{-steps[0], -steps[1], -steps[2]};
        for (std::size_t slot : r.slots)
            f[shifted_slot(g, slot, neg)] += atom.weight;
    }
    double acc = 0.0;
    for (std::size_t slot = 0; slot < f.size(); ++slot)
        acc += f[slot] * w[slot];
    return acc;
}

double momentum_covariance_defect(const State &psi, const MomentumRegion &r,
                                  const GroupElement &g, const Physics &ph) {
    const Grid &grid = psi.grid;
    return std::visit(
        [&](const auto &e) -> double {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Translation>) {
                const State moved = apply(psi, GroupElement{e}, ph);
                return std::abs(momentum_prob(moved, r) - momentum_prob(psi, r));
            } else if constexpr (std::is_same_v<T, Boost>) {
                // A boost by v moves the distribution by -m v, so the
                // reference region is transported by +m v.
                std::array<double, 3> mv{ph.mass * e.v[0], ph.mass * e.v[1], ph.mass * e.v[2]};
                const auto steps = momentum_steps(grid, mv);
                const State moved = apply(psi, GroupElement{e}, ph);
                return std::abs(momentum_prob(moved, r) -
                                momentum_prob(psi, shift_momentum_region(grid, r, steps)));
            } else if constexpr (std::is_same_v<T, Rotation>) {
                const State moved = apply(psi, GroupElement{e}, ph);
                return std::abs(momentum_prob(moved, rotate_momentum_region(grid, r, e.u)) -
                                momentum_prob(psi, r));
            } else {
                throw std::invalid_argument("momentum covariance is defined for translations, "
                                            "boosts and rotations");
            }
        },
        g);
}

double boost_transport_defect(const State &psi, const std::array<int, 3> &steps,
                              const Physics &ph) {
    const Grid &g = psi.grid;
    const std::vector<double> before = slot_masses(psi);
    const State boosted = apply(psi, Boost{lattice_boost(g, steps, ph)}, ph);
    const std::vector<double> after = slot_masses(boosted);
    double defect = 0.0;
    for (std::size_t slot = 0; slot < after.size(); ++slot)
        defect = std::max(defect, std::abs(after[slot] - before[shifted_slot(g, slot, steps)]));
    return defect;
}

double boost_mean_shift_defect(const State &psi, const std::array<double, 3> &v,
                               const Physics &ph) {
    const State boosted = apply(psi, Boost{v}, ph);
    double defect = 0.0;
    for (int i = 0; i < psi.grid.dims; ++i) {
        const double expected = mean_momentum(psi, i) - ph.mass * v[i];
        defect = std::max(defect, std::abs(mean_momentum(boosted, i) - expected));
    }
    return defect;
}

ContinuitySweep momentum_continuity_sweep(int n_base, double length_base, double hbar,
                                          const GaussianSpec &packet,
                                          const std::array<double, 3> &region_center,
                                          double region_radius, int doublings) {
    if (doublings < 1)
        throw std::invalid_argument("sweep needs at least one doubling");
    ContinuitySweep sweep;
    for (int d = 0; d <= doublings; ++d) {
        // dx fixed: the site count and the box grow together, so the momentum
        // lattice refines while the measured set stays the same.
        const Grid g = make_grid(1, n_base << d, length_base * (1 << d), hbar);
        const State psi = gaussian_state(g, 0, packet);
        const MomentumRegion r = momentum_ball(g, region_center, region_radius);
        sweep.n_values.push_back(g.n);
        sweep.probabilities.push_back(momentum_prob(psi, r));
    }
    const auto [lo, hi] =
        std::minmax_element(sweep.probabilities.begin(), sweep.probabilities.end());
    sweep.max_deviation = *hi - *lo;
    return sweep;
}

} // namespace galilei
