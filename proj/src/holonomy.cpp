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

#include "galilei/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace galilei {

namespace {

inline bool all_zero(const std::array<double, 3> &v) {
    return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0;
}

inline double dot3(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

State loop_apply(const State &psi, const LoopSpec &loop, const Physics &ph) {
    // With either leg missing the word collapses algebraically to the
    // identity, so it never touches the amplitudes.
    if (all_zero(loop.dv) || all_zero(loop.da))
        return psi;
    const std::array<double, 3> mdv{-loop.dv[0], -loop.dv[1], -loop.dv[2]};
    const std::array<double, 3> mda{-loop.da[0], -loop.da[1], -loop.da[2]};
    return apply_word(psi,
                      {Boost{loop.dv}, Translation{loop.da}, Boost{mdv}, Translation{mda}}, ph);
}

PhaseEstimate loop_phase(const State &psi, const LoopSpec &loop, const Physics &ph) {
    const State w = loop_apply(psi, loop, ph);
    const cplx overlap = inner(psi, w);
    PhaseEstimate est;
    est.magnitude_defect = std::abs(std::abs(overlap) - 1.0);
    est.phase = -std::arg(overlap);
    if (std::abs(est.phase) >= 0.99 * std::numbers::pi)
        throw std::invalid_argument("loop phase too close to the branch cut");
    return est;
}

MassEstimate extract_mass(const std::vector<State> &states, const LoopSpec &loop,
                          const Physics &ph) {
    if (states.size() < 2)
        throw std::invalid_argument("mass extraction needs at least two states");
    const double area = dot3(loop.dv, loop.da);
    if (area == 0.0)
        throw std::invalid_argument("loop legs must not be orthogonal or zero");

    MassEstimate est;
    for (const State &psi : states) {
        const PhaseEstimate pe = loop_phase(psi, loop, ph);
        est.values.push_back(psi.grid.hbar * pe.phase / area);
    }
    double sum = 0.0;
    for (double v : est.values)
        sum += v;
    est.mean = sum / static_cast<double>(est.values.size());
    for (double v : est.values)
        est.spread = std::max(est.spread, std::abs(v - est.mean));
    return est;
}

MultiplierReport boost_multiplier_check(const State &psi, const std::array<double, 3> &v,
                                        const Physics &ph, double amp_threshold) {
    const State boosted = apply(psi, Boost{v}, ph);
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    const double scale = ph.mass / g.hbar;

    MultiplierReport rep;
    std::array<int, 3> origin{0, 0, 0};
    for (int i = 0; i < g.dims; ++i)
        origin[i] = g.n / 2;
    const std::size_t origin_site = flatten(g, origin);

    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < g.dims; ++i)
            x[i] = g.coord(k[i]);
        const cplx expected = std::exp(cplx{0.0, -scale * dot3(v, x)});

        bool have_first = false;
        cplx first{0.0, 0.0};
        for (int s = 0; s < sd; ++s) {
            const cplx denom = psi.amp[site * sd + s];
            if (std::abs(denom) <= amp_threshold)
                continue;
            const cplx ratio = boosted.amp[site * sd + s] / denom;
            rep.max_defect = std::max(rep.max_defect, std::abs(ratio - expected));
            if (site == origin_site)
                rep.origin_defect = std::max(rep.origin_defect, std::abs(ratio - 1.0));
            if (have_first)
                rep.spin_ratio_defect = std::max(rep.spin_ratio_defect, std::abs(ratio - first));
            else {
                first = ratio;
                have_first = true;
            }
        }
    }
    return rep;
}

} // namespace galilei
