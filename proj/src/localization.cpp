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

#include "galilei/localization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

// Probability density per site, summed over spin.
std::vector<double> site_density(const State &psi) {
    const int sd = psi.spin_dim();
    std::vector<double> rho(psi.grid.sites());
    for (std::size_t site = 0; site < rho.size(); ++site) {
        double m = 0.0;
        for (int s = 0; s < sd; ++s)
            m += std::norm(psi.amp[site * sd + s]);
        rho[site] = m;
    }
    return rho;
}

std::array<int, 3> atom_steps(const Grid &g, const std::array<double, 3> &offset) {
    std::array<int, 3> steps{0, 0, 0};
    for (int i = 0; i < g.dims; ++i) {
        const double raw = offset[i] / g.dx();
        const double snapped = std::round(raw);
        if (std::abs(raw - snapped) > 1e-9)
            throw std::invalid_argument("kernel atom does not sit on a grid node");
        steps[i] = static_cast<int>(snapped);
    }
    return steps;
}

std::size_t shifted_site(const Grid &g, std::size_t site, const std::array<int, 3> &steps) {
    auto k = unflatten(g, site);
    for (int i = 0; i < g.dims; ++i)
        k[i] = wrap_index(k[i] + steps[i], g.n);
    return flatten(g, k);
}

// Smeared indicator f(x) = sum_j w_j 1_B(x + y_j), tabulated over all sites.
std::vector<double> smeared_indicator(const Grid &g, const Region &b, const SmearKernel &k) {
    std::vector<double> f(g.sites(), 0.0);
    for (const auto &atom : k.atoms) {
        const auto steps = atom_steps(g, atom.offset);
        // x + y in B  <=>  x in B - y
        std::array<int, 3> neg{-steps[0], -steps[1], -steps[2]};
        for (std::size_t site : b.sites)
            f[shifted_site(g, site, neg)] += atom.weight;
    }
    return f;
}

} // namespace

Region box_region(const Grid &g, const std::array<double, 3> &lo,
                  const std::array<double, 3> &hi) {
    Region r;
    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        bool in = true;
        for (int i = 0; i < g.dims && in; ++i) {
            const double x = g.coord(k[i]);
            in = lo[i] <= x && x < hi[i];
        }
        if (in)
            r.sites.push_back(site);
    }
    return r;
}

Region ball_region(const Grid &g, const std::array<double, 3> &center, double radius) {
    Region r;
    const double r2 = radius * radius;
    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        double d2 = 0.0;
        for (int i = 0; i < g.dims; ++i) {
            const double d = g.coord(k[i]) - center[i];
            d2 += d * d;
        }
        if (d2 <= r2)
            r.sites.push_back(site);
    }
    return r;
}

Region region_union(const Region &a, const Region &b) {
    Region r;
    r.sites.reserve(a.sites.size() + b.sites.size());
    std::set_union(a.sites.begin(), a.sites.end(), b.sites.begin(), b.sites.end(),
                   std::back_inserter(r.sites));
    return r;
}

bool regions_disjoint(const Region &a, const Region &b) {
    std::size_t i = 0, j = 0;
    while (i < a.sites.size() && j < b.sites.size()) {
        if (a.sites[i] == b.sites[j])
            return false;
        if (a.sites[i] < b.sites[j])
            ++i;
        else
            ++j;
    }
    return true;
}

Region translate_region(const Grid &g, const Region &r, const std::array<int, 3> &steps) {
    Region out;
    out.sites.reserve(r.sites.size());
    for (std::size_t site : r.sites)
        out.sites.push_back(shifted_site(g, site, steps));
    std::sort(out.sites.begin(), out.sites.end());
    return out;
}

Region rotate_region(const Grid &g, const Region &r, const Quaternion &u) {
    std::array<int, 3> perm, sign;
    if (!grid_aligned_rotation(u, perm, sign))
        throw std::invalid_argument("rotation is not grid aligned");
    Region out;
    out.sites.reserve(r.sites.size());
    for (std::size_t site : r.sites) {
        const auto k = unflatten(g, site);
        std::array<int, 3> kk{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const int src = k[perm[i]];
            kk[i] = sign[i] > 0 ? src : (g.n - src) % g.n;
        }
        out.sites.push_back(flatten(g, kk));
    }
    std::sort(out.sites.begin(), out.sites.end());
    return out;
}

SmearKernel sharp_kernel() {
    SmearKernel k;
    k.atoms.push_back({{0.0, 0.0, 0.0}, 1.0});
    return k;
}

SmearKernel make_kernel(const Grid &g, const std::vector<SmearKernel::Atom> &atoms) {
    if (atoms.empty())
        throw std::invalid_argument("kernel needs at least one atom");
    double total = 0.0;
    SmearKernel k;
    for (const auto &atom : atoms) {
        if (!(atom.weight > 0.0))
            throw std::invalid_argument("kernel weights must be positive");
        const auto steps = atom_steps(g, atom.offset); // validates node alignment
        SmearKernel::Atom snapped;
        for (int i = 0; i < g.dims; ++i)
            snapped.offset[i] = steps[i] * g.dx();
        snapped.weight = atom.weight;
        k.atoms.push_back(snapped);
        total += atom.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("kernel weights must sum to one");
    return k;
}

double povm_prob(const State &psi, const Region &b, const SmearKernel &k) {
    const Grid &g = psi.grid;
    const std::vector<double> f = smeared_indicator(g, b, k);
    const std::vector<double> rho = site_density(psi);
    double acc = 0.0;
    for (std::size_t site = 0; site < f.size(); ++site)
        acc += f[site] * rho[site];
    return acc * volume_element(g);
}

double povm_prob_bruteforce(const State &psi, const Region &b, const SmearKernel &k) {
    // Deliberately naive: iterate atoms and region sites directly.
    const Grid &g = psi.grid;
    const std::vector<double> rho = site_density(psi);
    double acc = 0.0;
    for (const auto &atom : k.atoms) {
        const auto steps = atom_steps(g, atom.offset);
        std::array<int, 3> neg{-steps[0], -steps[1], -steps[2]};
        double part = 0.0;
        for (std::size_t site : b.sites)
            part += rho[shifted_site(g, site, neg)];
        acc += atom.weight * part;
    }
    return acc * volume_element(g);
}

double povm_norm(const Grid &g, const Region &b, const SmearKernel &k) {
    const std::vector<double> f = smeared_indicator(g, b, k);
    double m = 0.0;
    for (double v : f)
        m = std::max(m, v);
    return m;
}

namespace {

// Solve erfc(z) = target on z >= 0 by bisection; erfc is strictly decreasing.
double erfc_inverse(double target) {
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::erfc(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

FocusResult focusing_state(const Grid &g, int two_s, double radius, double epsilon,
                           const std::array<double, 3> &center) {
    if (!(radius > 5.0 * g.dx()))
        throw std::invalid_argument("focusing radius must exceed five grid cells");
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("focusing epsilon must lie in (0, 1/2)");

    const Region ball = ball_region(g, center, radius);
    const SmearKernel sharp = sharp_kernel();

    // Analytic seed: a Gaussian whose tail bound already beats epsilon/3,
    // then shrink until the grid sum itself certifies the target.
    const double z = erfc_inverse(epsilon / 3.0);
    double sigma = radius / (std::sqrt(2.0) * z);
    double margin = 0.5 * g.length;
    for (int i = 0; i < g.dims; ++i)
        margin = std::min(margin, 0.5 * g.length - std::abs(center[i]));
    sigma = std::min(sigma, margin / 5.01);

    while (sigma >= 1.5 * g.dx()) {
        GaussianSpec spec;
        spec.center = center;
        spec.width = {sigma, sigma, sigma};
        const State psi = gaussian_state(g, two_s, spec);
        const double achieved = povm_prob(psi, ball, sharp);
        if (achieved >= 1.0 - epsilon)
            return {psi, achieved};
        sigma *= 0.85;
    }
    throw std::runtime_error("grid cannot resolve a state focused that tightly");
}

double covariance_defect(const State &psi, const Region &b, const GroupElement &g,
                         const SmearKernel &k, const Physics &ph) {
    const Grid &grid = psi.grid;
    const double base = povm_prob(psi, b, k);
    return std::visit(
        [&](const auto &e) -> double {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Translation>) {
                std::array<int, 3> steps{0, 0, 0};
                for (int i = 0; i < grid.dims; ++i) {
                    const double raw = e.a[i] / grid.dx();
                    const double snapped = std::round(raw);
                    if (std::abs(raw - snapped) > 1e-9)
                        throw std::invalid_argument(
                            "translation covariance needs a lattice vector");
                    steps[i] = static_cast<int>(snapped);
                }
                const State moved = apply(psi, GroupElement{e}, ph);
                return std::abs(povm_prob(moved, translate_region(grid, b, steps), k) - base);
            } else if constexpr (std::is_same_v<T, Boost>) {
                const State moved = apply(psi, GroupElement{e}, ph);
                return std::abs(povm_prob(moved, b, k) - base);
            } else if constexpr (std::is_same_v<T, Rotation>) {
                const State moved = apply(psi, GroupElement{e}, ph);
                const Mat3 r = rotation_matrix(e.u);
                SmearKernel rk;
                for (const auto &atom : k.atoms)
                    rk.atoms.push_back({mat3_apply(r, atom.offset), atom.weight});
                return std::abs(povm_prob(moved, rotate_region(grid, b, e.u), rk) - base);
            } else {
                throw std::invalid_argument(
                    "position covariance is defined for translations, boosts and rotations");
            }
        },
        g);
}

} // namespace galilei
