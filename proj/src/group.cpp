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

#include "galilei/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "galilei/fourier.hpp"

namespace galilei {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

inline bool all_zero(const std::array<double, 3> &v) {
    return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0;
}

inline double dot3(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Unimodular phase with the argument reduced first, so full turns are exact.
inline cplx reduced_phase(double angle) { return std::polar(1.0, std::remainder(angle, two_pi)); }

State apply_translation(const State &psi, const std::array<double, 3> &a) {
    if (all_zero(a))
        return psi;
    State out = psi;
    const double hbar = psi.grid.hbar;
    apply_momentum_multiplier(out, [&](const std::array<double, 3> &p) {
        return reduced_phase(-dot3(p, a) / hbar);
    });
    return out;
}

State apply_boost(const State &psi, const std::array<double, 3> &v, const Physics &ph) {
    if (all_zero(v))
        return psi;
    State out = psi;
    const double scale = ph.mass / psi.grid.hbar;
    apply_position_multiplier(out, [&](const std::array<double, 3> &x) {
        return reduced_phase(-scale * dot3(v, x));
    });
    return out;
}

State apply_time(const State &psi, double t, const Physics &ph) {
    if (t == 0.0)
        return psi;
    State out = psi;
    const double hbar = psi.grid.hbar;
    apply_momentum_multiplier(out, [&](const std::array<double, 3> &p) {
        const double energy = dot3(p, p) / (2.0 * ph.mass) + ph.energy_offset;
        return reduced_phase(-t * energy / hbar);
    });
    return out;
}

State apply_central(const State &psi, double lambda, const Physics &ph) {
    if (lambda == 0.0)
        return psi;
    State out = psi;
    const cplx z = reduced_phase(-ph.mass * lambda / psi.grid.hbar);
    for (cplx &c : out.amp)
        c *= z;
    return out;
}

State apply_rotation(const State &psi, const Quaternion &u) {
    if (u.w == 1.0 && u.x == 0.0 && u.y == 0.0 && u.z == 0.0)
        return psi;
    const Grid &g = psi.grid;
    if (g.dims != 3)
        throw std::invalid_argument("rotations need a 3D grid");

    std::array<int, 3> perm, sign;
    if (!grid_aligned_rotation(u, perm, sign))
        throw std::invalid_argument("rotation is not grid aligned");
    std::array<int, 3> inv_perm{0, 0, 0};
    for (int j = 0; j < 3; ++j)
        inv_perm[perm[j]] = j;

    const SpinMatrix d = spin_rotation(psi.two_s, u);
    const int sd = psi.spin_dim();
    State out = make_state(g, psi.two_s);

    // out(x) = D psi(R^-1 x); coordinate negation is the exact index map
    // k -> (n - k) mod n because the grid is centered.
    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        std::array<int, 3> src{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const int j = inv_perm[i]; // output axis feeding source axis i
            src[i] = sign[j] > 0 ? k[j] : (g.n - k[j]) % g.n;
        }
        const std::size_t s_in = flatten(g, src) * sd;
        const std::size_t s_out = site * sd;
        for (int r = 0; r < sd; ++r) {
            cplx acc{0.0, 0.0};
            for (int c = 0; c < sd; ++c)
                acc += d.at(r, c) * psi.amp[s_in + c];
            out.amp[s_out + r] = acc;
        }
    }
    return out;
}

} // namespace

State apply(const State &psi, const GroupElement &g, const Physics &ph) {
    return std::visit(
        [&](const auto &e) -> State {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Translation>)
                return apply_translation(psi, e.a);
            else if constexpr (std::is_same_v<T, Boost>)
                return apply_boost(psi, e.v, ph);
            else if constexpr (std::is_same_v<T, TimeShift>)
                return apply_time(psi, e.t, ph);
            else if constexpr (std::is_same_v<T, Rotation>)
                return apply_rotation(psi, e.u);
            else
                return apply_central(psi, e.lambda, ph);
        },
        g);
}

State apply_word(const State &psi, const std::vector<GroupElement> &word, const Physics &ph) {
    State cur = psi;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = apply(cur, *it, ph);
    return cur;
}

double weyl_defect(const State &psi, const std::array<double, 3> &v,
                   const std::array<double, 3> &a, const Physics &ph) {
    const State lhs = apply(apply(psi, Translation{a}, ph), Boost{v}, ph);
    State rhs = apply(apply(psi, Boost{v}, ph), Translation{a}, ph);
    const cplx z = reduced_phase(-ph.mass * dot3(v, a) / psi.grid.hbar);
    for (cplx &c : rhs.amp)
        c *= z;
    return norm_diff(lhs, rhs);
}

double time_translation_defect(const State &psi, double t, const std::array<double, 3> &a,
                               const Physics &ph) {
    const State lhs =
        apply(apply(apply(psi, TimeShift{-t}, ph), Translation{a}, ph), TimeShift{t}, ph);
    const State rhs = apply(psi, Translation{a}, ph);
    return norm_diff(lhs, rhs);
}

double time_boost_defect(const State &psi, double t, const std::array<double, 3> &v,
                         const Physics &ph) {
    const State lhs = apply(apply(apply(psi, TimeShift{-t}, ph), Boost{v}, ph), TimeShift{t}, ph);
    const std::array<double, 3> shift{-t * v[0], -t * v[1], -t * v[2]};
    State rhs = apply(apply(apply(psi, Boost{v}, ph), Translation{shift}, ph),
                      Central{-0.5 * t * dot3(v, v)}, ph);
    return norm_diff(lhs, rhs);
}

double rotation_translation_defect(const State &psi, const Quaternion &u,
                                   const std::array<double, 3> &a, const Physics &ph) {
    const State lhs = apply(apply(apply(psi, Rotation{quat_conj(u)}, ph), Translation{a}, ph),
                            Rotation{u}, ph);
    const State rhs = apply(psi, Translation{mat3_apply(rotation_matrix(u), a)}, ph);
    return norm_diff(lhs, rhs);
}

double rotation_boost_defect(const State &psi, const Quaternion &u,
                             const std::array<double, 3> &v, const Physics &ph) {
    const State lhs =
        apply(apply(apply(psi, Rotation{quat_conj(u)}, ph), Boost{v}, ph), Rotation{u}, ph);
    const State rhs = apply(psi, Boost{mat3_apply(rotation_matrix(u), v)}, ph);
    return norm_diff(lhs, rhs);
}

double rotation_time_defect(const State &psi, const Quaternion &u, double t, const Physics &ph) {
    const State lhs = apply(apply(psi, Rotation{u}, ph), TimeShift{t}, ph);
    const State rhs = apply(apply(psi, TimeShift{t}, ph), Rotation{u}, ph);
    return norm_diff(lhs, rhs);
}

double central_commutation_defect(const State &psi, const GroupElement &g, double lambda,
                                  const Physics &ph) {
    const State lhs = apply(apply(psi, g, ph), Central{lambda}, ph);
    const State rhs = apply(apply(psi, Central{lambda}, ph), g, ph);
    return norm_diff(lhs, rhs);
}

std::array<double, 3> lattice_translation(const Grid &g, const std::array<int, 3> &steps) {
    std::array<double, 3> a{0.0, 0.0, 0.0};
    for (int i = 0; i < g.dims; ++i)
        a[i] = steps[i] * g.dx();
    return a;
}

std::array<double, 3> lattice_boost(const Grid &g, const std::array<int, 3> &steps,
                                    const Physics &ph) {
    std::array<double, 3> v{0.0, 0.0, 0.0};
    for (int i = 0; i < g.dims; ++i)
        v[i] = steps[i] * g.dp() / ph.mass;
    return v;
}

} // namespace galilei
