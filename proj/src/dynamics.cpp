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

#include "galilei/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "galilei/observables.hpp"

namespace galilei {

namespace {

std::vector<double> sample_times(double t_max, int n_steps) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("time span must be positive and finite");
    if (n_steps < 1)
        throw std::invalid_argument("need at least one time step");
    std::vector<double> times(static_cast<std::size_t>(n_steps) + 1);
    for (int i = 0; i <= n_steps; ++i)
        times[static_cast<std::size_t>(i)] =
            t_max * static_cast<double>(i) / static_cast<double>(n_steps);
    return times;
}

} // namespace

void check_travel_horizon(const State &psi, double t_max, const Physics &ph) {
    const Grid &g = psi.grid;
    for (int axis = 0; axis < g.dims; ++axis) {
        const double x0 = mean_position(psi, axis);
        const double drift = std::abs(mean_momentum(psi, axis) / ph.mass) * t_max;
        const double sigma0_sq = variance_position(psi, axis);
        const double sigma_t =
            std::sqrt(sigma0_sq + t_max * t_max * variance_momentum(psi, axis) /
                                      (ph.mass * ph.mass));
        if (std::abs(x0) + drift + 5.0 * sigma_t > 0.5 * g.length)
            throw std::invalid_argument("packet would wrap around within the time span");
    }
}

Trajectory heisenberg_trajectory(const State &psi0, double t_max, int n_steps,
                                 const Physics &ph) {
    check_travel_horizon(psi0, t_max, ph);
    Trajectory tr;
    tr.dims = psi0.grid.dims;
    tr.times = sample_times(t_max, n_steps);
    for (double t : tr.times) {
        // Evolve from the initial state each time; the propagator is exact,
        // so there is no accumulation to exploit or to fear.
        const State psi = apply(psi0, TimeShift{t}, ph);
        std::array<double, 3> mx{0.0, 0.0, 0.0};
        std::array<double, 3> mp{0.0, 0.0, 0.0};
        std::array<double, 3> vx{0.0, 0.0, 0.0};
        for (int axis = 0; axis < tr.dims; ++axis) {
            mx[static_cast<std::size_t>(axis)] = mean_position(psi, axis);
            mp[static_cast<std::size_t>(axis)] = mean_momentum(psi, axis);
            vx[static_cast<std::size_t>(axis)] = variance_position(psi, axis);
        }
        tr.mean_x.push_back(mx);
        tr.mean_p.push_back(mp);
        tr.var_x.push_back(vx);
        tr.mean_h.push_back(mean_energy(psi, ph));
    }
    return tr;
}

LineFit fit_line(const std::vector<double> &t, const std::vector<double> &y) {
    if (t.size() != y.size() || t.size() < 2)
        throw std::invalid_argument("line fit needs two equal-length samples");
    const double n = static_cast<double>(t.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double denom = n * stt - st * st;
    if (denom == 0.0)
        throw std::invalid_argument("degenerate abscissae");
    LineFit fit;
    fit.slope = (n * sty - st * sy) / denom;
    fit.intercept = (sy - fit.slope * st) / n;
    for (std::size_t i = 0; i < t.size(); ++i)
        fit.max_residual =
            std::max(fit.max_residual, std::abs(y[i] - (fit.intercept + fit.slope * t[i])));
    return fit;
}

double casimir_expectation_defect(const std::vector<State> &states, const Physics &ph) {
    if (states.empty())
        throw std::invalid_argument("need at least one state");
    const Op cas = casimir_op(ph);
    double worst = 0.0;
    for (const State &psi : states) {
        const std::complex<double> val = expect(psi, cas);
        worst = std::max(worst,
                         std::abs(val - std::complex<double>{2.0 * ph.mass * ph.energy_offset,
                                                             0.0}));
    }
    return worst;
}

double casimir_commutation_defect(const std::vector<State> &states,
                                  const std::vector<GroupElement> &elements, const Physics &ph) {
    if (states.empty() || elements.empty())
        throw std::invalid_argument("need states and elements");
    const Op cas = casimir_op(ph);
    double worst = 0.0;
    for (const State &psi : states) {
        const State cpsi = cas(psi);
        for (const GroupElement &g : elements) {
            const State lhs = cas(apply(psi, g, ph));
            const State rhs = apply(cpsi, g, ph);
            worst = std::max(worst, norm_diff(lhs, rhs));
        }
    }
    return worst;
}

double boost_then_evolve_defect(const State &psi, const std::array<double, 3> &v, double t,
                                const Physics &ph) {
    const State moved = apply(apply(psi, Boost{v}, ph), TimeShift{t}, ph);
    double worst = 0.0;
    for (int axis = 0; axis < psi.grid.dims; ++axis) {
        const double x0 = mean_position(psi, axis);
        const double p0 = mean_momentum(psi, axis);
        const double expected =
            x0 + (p0 / ph.mass - v[static_cast<std::size_t>(axis)]) * t;
        worst = std::max(worst, std::abs(mean_position(moved, axis) - expected));
    }
    return worst;
}

double variance_growth_defect(const State &psi, double t_max, int n_steps, const Physics &ph) {
    const Trajectory tr = heisenberg_trajectory(psi, t_max, n_steps, ph);
    double worst = 0.0;
    for (int axis = 0; axis < tr.dims; ++axis) {
        const double var0 = tr.var_x.front()[static_cast<std::size_t>(axis)];
        const double varp = variance_momentum(psi, axis);
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            const double t = tr.times[i];
            const double expected = var0 + t * t * varp / (ph.mass * ph.mass);
            worst = std::max(worst,
                             std::abs(tr.var_x[i][static_cast<std::size_t>(axis)] - expected));
        }
    }
    return worst;
}

double energy_conservation_defect(const State &psi, double t_max, int n_steps,
                                  const Physics &ph) {
    const Trajectory tr = heisenberg_trajectory(psi, t_max, n_steps, ph);
    double worst = 0.0;
    for (double h : tr.mean_h)
        worst = std::max(worst, std::abs(h - tr.mean_h.front()));
    return worst;
}

double energy_offset_invariance_defect(const State &psi, double t_max, int n_steps,
                                       double mass, double e0_a, double e0_b) {
    const Trajectory a = heisenberg_trajectory(psi, t_max, n_steps, Physics{mass, e0_a});
    const Trajectory b = heisenberg_trajectory(psi, t_max, n_steps, Physics{mass, e0_b});
    double worst = 0.0;
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        for (int axis = 0; axis < a.dims; ++axis) {
            const auto ax = static_cast<std::size_t>(axis);
            worst = std::max(worst, std::abs(a.mean_x[i][ax] - b.mean_x[i][ax]));
            worst = std::max(worst, std::abs(a.mean_p[i][ax] - b.mean_p[i][ax]));
            worst = std::max(worst, std::abs(a.var_x[i][ax] - b.var_x[i][ax]));
        }
        // The offset feeds straight through <H>; compare with it removed.
        worst = std::max(worst, std::abs((a.mean_h[i] - e0_a) - (b.mean_h[i] - e0_b)));
    }
    return worst;
}

void write_trajectory_csv(const Trajectory &tr, const std::string &path) {
    std::FILE *f = std::fopen(path.c_str(), "w");
    if (f == nullptr)
        throw std::runtime_error("cannot open trajectory file: " + path);
    std::fputs("time", f);
    for (int axis = 0; axis < tr.dims; ++axis)
        std::fprintf(f, ",mean_x%d", axis);
    for (int axis = 0; axis < tr.dims; ++axis)
        std::fprintf(f, ",mean_p%d", axis);
    for (int axis = 0; axis < tr.dims; ++axis)
        std::fprintf(f, ",var_x%d", axis);
    std::fputs(",mean_h\n", f);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        std::fprintf(f, "%.17g", tr.times[i]);
        for (int axis = 0; axis < tr.dims; ++axis)
            std::fprintf(f, ",%.17g", tr.mean_x[i][static_cast<std::size_t>(axis)]);
        for (int axis = 0; axis < tr.dims; ++axis)
            std::fprintf(f, ",%.17g", tr.mean_p[i][static_cast<std::size_t>(axis)]);
        for (int axis = 0; axis < tr.dims; ++axis)
            std::fprintf(f, ",%.17g", tr.var_x[i][static_cast<std::size_t>(axis)]);
        std::fprintf(f, ",%.17g\n", tr.mean_h[i]);
    }
    std::fclose(f);
}

} // namespace galilei
