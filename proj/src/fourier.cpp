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

#include "galilei/fourier.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fftw3.h>

namespace galilei {

namespace {

std::mutex &plan_mutex() {
    static std::mutex m;
    return m;
}

// Raw unnormalized DFT of an interleaved spinor array, spin index fastest.
// Runs on fftw-aligned scratch so plan selection, and therefore rounding, is
// identical from run to run.
void run_dft(const Grid &g, int spin_dim, const cplx *in, cplx *out, int sign) {
    const std::size_t total = g.sites() * static_cast<std::size_t>(spin_dim);
    fftw_complex *a = fftw_alloc_complex(total);
    fftw_complex *b = fftw_alloc_complex(total);
    if (a == nullptr || b == nullptr) {
        fftw_free(a);
        fftw_free(b);
        throw std::runtime_error("fftw allocation failed");
    }
    // std::complex<double> is array-of-two-double compatible by [complex.numbers].
    std::memcpy(static_cast<void *>(a), static_cast<const void *>(in), total * sizeof(cplx));

    int dims_arr[3] = {g.n, g.n, g.n};
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_many_dft(g.dims, dims_arr, spin_dim, a, nullptr, spin_dim, 1, b,
                                  nullptr, spin_dim, 1, sign, FFTW_ESTIMATE);
    }
    if (plan == nullptr) {
        fftw_free(a);
        fftw_free(b);
        throw std::runtime_error("fftw planning failed");
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    std::memcpy(static_cast<void *>(out), static_cast<const void *>(b), total * sizeof(cplx));
    fftw_free(a);
    fftw_free(b);
}

// Parity (-1)^(sum of slot indices); exact because n/2 is even.
inline double slot_parity(const std::array<int, 3> &q, int dims) {
    int s = 0;
    for (int i = 0; i < dims; ++i)
        s += q[i];
    return (s & 1) ? -1.0 : 1.0;
}

} // namespace

std::vector<cplx> to_momentum(const State &psi) {
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    const std::size_t ns = g.sites();

    std::vector<cplx> raw(psi.amp.size());
    run_dft(g, sd, psi.amp.data(), raw.data(), FFTW_FORWARD);

    const double scale = std::pow(g.dx() / std::sqrt(2.0 * std::numbers::pi * g.hbar), g.dims);
    std::vector<cplx> mom(psi.amp.size());
    const int half = g.n / 2;
    for (std::size_t slot = 0; slot < ns; ++slot) {
        const auto q = unflatten(g, slot);
        std::array<int, 3> t{0, 0, 0};
        for (int i = 0; i < g.dims; ++i)
            t[i] = (q[i] + half) % g.n;
        const std::size_t src = flatten(g, t);
        const double f = scale * slot_parity(q, g.dims);
        for (int s = 0; s < sd; ++s)
            mom[slot * sd + s] = f * raw[src * sd + s];
    }
    return mom;
}

State from_momentum(const Grid &g, int two_s, const std::vector<cplx> &mom) {
    const int sd = two_s + 1;
    const std::size_t ns = g.sites();
    if (mom.size() != ns * static_cast<std::size_t>(sd))
        throw std::invalid_argument("momentum amplitude size mismatch");

    std::vector<cplx> scratch(mom.size());
    const int half = g.n / 2;
    for (std::size_t slot = 0; slot < ns; ++slot) {
        const auto q = unflatten(g, slot);
        std::array<int, 3> t{0, 0, 0};
        for (int i = 0; i < g.dims; ++i)
            t[i] = (q[i] + half) % g.n;
        const std::size_t dst = flatten(g, t);
        const double f = slot_parity(q, g.dims);
        for (int s = 0; s < sd; ++s)
            scratch[dst * sd + s] = f * mom[slot * sd + s];
    }

    State out = make_state(g, two_s);
    run_dft(g, sd, scratch.data(), out.amp.data(), FFTW_BACKWARD);
    const double scale = std::pow(g.dp() / std::sqrt(2.0 * std::numbers::pi * g.hbar), g.dims);
    for (cplx &c : out.amp)
        c *= scale;
    return out;
}

void apply_momentum_multiplier(State &psi,
                               const std::function<cplx(const std::array<double, 3> &)> &f) {
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    std::vector<cplx> mom = to_momentum(psi);
    const std::size_t ns = g.sites();
    for (std::size_t slot = 0; slot < ns; ++slot) {
        const auto q = unflatten(g, slot);
        std::array<double, 3> p{0.0, 0.0, 0.0};
        for (int i = 0; i < g.dims; ++i)
            p[i] = g.momentum(q[i]);
        const cplx m = f(p);
        for (int s = 0; s < sd; ++s)
            mom[slot * sd + s] *= m;
    }
    psi = from_momentum(g, psi.two_s, mom);
}

void apply_position_multiplier(State &psi,
                               const std::function<cplx(const std::array<double, 3> &)> &f) {
    const Grid &g = psi.grid;
    const int sd = psi.spin_dim();
    const std::size_t ns = g.sites();
    for (std::size_t site = 0; site < ns; ++site) {
        const auto k = unflatten(g, site);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < g.dims; ++i)
            x[i] = g.coord(k[i]);
        const cplx m = f(x);
        for (int s = 0; s < sd; ++s)
            psi.amp[site * sd + s] *= m;
    }
}

} // namespace galilei
