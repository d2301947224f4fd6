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

#include "galilei/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <semaphore>
#include <stdexcept>
#include <thread>

#include "galilei/duality.hpp"
#include "galilei/dynamics.hpp"
#include "galilei/fourier.hpp"
#include "galilei/holonomy.hpp"
#include "galilei/localization.hpp"
#include "galilei/momentum_povm.hpp"
#include "galilei/observables.hpp"
#include "galilei/random_states.hpp"
#include "galilei/version.hpp"

namespace galilei {

namespace {

constexpr double pi = std::numbers::pi;

/// Runs one measurement, times it, and records pass = measured <= tolerance.
struct Collector {
    std::string suite;
    std::vector<CheckResult> out;

    void add(const std::string &name, const std::string &anchor, double tolerance,
             const std::function<double()> &measure) {
        CheckResult r;
        r.suite = suite;
        r.name = name;
        r.anchor = anchor;
        r.tolerance = tolerance;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.measured = measure();
            r.pass = std::isfinite(r.measured) && r.measured <= tolerance;
        } catch (const std::exception &e) {
            r.measured = std::numeric_limits<double>::infinity();
            r.pass = false;
            r.anchor += std::string(" [threw: ") + e.what() + "]";
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
};

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag & 0xffffffffu),
                      static_cast<std::uint32_t>(tag >> 32)};
    return std::mt19937_64(seq);
}

Quaternion random_unit_quaternion(std::mt19937_64 &gen) {
    std::normal_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const Quaternion q{unit(gen), unit(gen), unit(gen), unit(gen)};
        const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
        if (n > 1e-3)
            return quat_normalize(q);
    }
}

/// Shared laboratory boxes and deterministic state draws for one run.
struct Lab {
    RunConfig cfg;
    Grid g1, g3;
    Physics ph;
    StateProfile prof1, prof3;

    State one(std::uint64_t index) const {
        return random_admissible_state(g1, 0, prof1, cfg.seed, index);
    }
    State three(std::uint64_t index) const {
        return random_admissible_state(g3, cfg.rot_two_s, prof3, cfg.seed, index);
    }
};

Lab make_lab(const RunConfig &cfg) {
    Lab lab;
    lab.cfg = cfg;
    lab.g1 = make_grid(1, cfg.grid_n, cfg.grid_length, cfg.hbar);
    lab.g3 = make_grid(3, cfg.rot_n, cfg.rot_length, cfg.hbar);
    lab.ph = Physics{cfg.mass, cfg.energy_offset};
    lab.prof1 = profile_for(lab.g1);
    lab.prof3 = profile_for(lab.g3);
    return lab;
}

std::string csv_path(const RunConfig &cfg, const std::string &file) {
    return (std::filesystem::path(cfg.csv_dir) / file).string();
}

// ---------------------------------------------------------------------------
// duality: the finite generator-recovery model
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_duality(const RunConfig &cfg) {
    Collector c{"duality", {}};
    const DualityFamily fam = standard_family();
    const int k = fam.directions();
    const int d = fam.dim;

    const auto random_direction = [&](std::mt19937_64 &gen) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Eigen::VectorXd v(k);
        for (int i = 0; i < k; ++i)
            v[i] = u(gen);
        return v;
    };

    c.add("coordinate-directions", "D(e_k) = A_k", 1e-9, [&] {
        double worst = 0.0;
        for (int j = 0; j < k; ++j) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
            e[j] = 1.0;
            worst = std::max(
                worst, herm_max_abs(duality_map(fam, e) - fam.basis[static_cast<std::size_t>(j)]));
        }
        return worst;
    });

    c.add("linearity", "D(a v + b w) = a D(v) + b D(w)", 1e-9, [&] {
        auto gen = seeded(cfg.seed, 101);
        const Eigen::VectorXd v = random_direction(gen);
        const Eigen::VectorXd w = random_direction(gen);
        const Eigen::MatrixXcd lhs = duality_map(fam, (0.7 * v - 1.3 * w).eval());
        const Eigen::MatrixXcd rhs = 0.7 * duality_map(fam, v) - 1.3 * duality_map(fam, w);
        return herm_max_abs(lhs - rhs);
    });

    c.add("gauge-line-drop", "gauge term c(theta) I never reaches D", 1e-10, [&] {
        auto gen = seeded(cfg.seed, 102);
        const Eigen::VectorXd v = random_direction(gen);
        DualityFamily gauged = fam;
        gauged.gauge = [](const Eigen::VectorXd &th) {
            double s = 0.0;
            for (int i = 0; i < th.size(); ++i)
                s += static_cast<double>(i + 1) * th[i];
            return s;
        };
        return herm_max_abs(duality_map(gauged, v) - duality_map(fam, v));
    });

    c.add("nonlinear-gauge", "quadratic gauge c = |theta|^2 also drops", 1e-10, [&] {
        auto gen = seeded(cfg.seed, 103);
        const Eigen::VectorXd v = random_direction(gen);
        DualityFamily gauged = fam;
        gauged.gauge = [](const Eigen::VectorXd &th) { return th.squaredNorm(); };
        return herm_max_abs(duality_map(gauged, v) - duality_map(fam, v));
    });

    c.add("traceless-hermitian", "raw contraction is traceless Hermitian", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 104);
        const Eigen::VectorXd v = random_direction(gen);
        const Eigen::MatrixXcd omega = connection_superop(fam, v);
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(d, d);
        for (int j = 0; j < d; ++j)
            t += omega.block(j * d, j * d, d, d);
        const Eigen::MatrixXcd raw =
            (std::complex<double>{0.0, 1.0} * fam.hbar / static_cast<double>(d)) * t;
        const double herm = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
        return std::max(herm, std::abs(raw.trace()));
    });

    c.add("rank-full", "independent directions give rank 10", 0.49,
          [&] { return std::abs(static_cast<double>(injectivity_rank(fam)) - 10.0); });

    c.add("rank-duplicate", "a repeated direction drops the rank to 9", 0.49, [&] {
        return std::abs(static_cast<double>(injectivity_rank(with_duplicate_direction(fam))) -
                        9.0);
    });

    c.add("rank-trace-shift", "identity shifts cannot restore the rank", 0.49, [&] {
        return std::abs(
            static_cast<double>(injectivity_rank(with_trace_shifted_duplicate(fam))) - 9.0);
    });

    c.add("curve-independence", "D depends only on the curve velocity", 1e-7, [&] {
        auto gen = seeded(cfg.seed, 105);
        const Eigen::VectorXd v = random_direction(gen);
        const Eigen::VectorXd w = random_direction(gen);
        const Eigen::VectorXd u = random_direction(gen);
        Curve quad = straight_curve(v);
        quad.w = w;
        Curve cubic = straight_curve(v);
        cubic.w = w;
        cubic.u = u;
        const Eigen::MatrixXcd a = duality_map(fam, straight_curve(v));
        const Eigen::MatrixXcd b = duality_map(fam, quad);
        const Eigen::MatrixXcd e = duality_map(fam, cubic);
        return std::max({herm_max_abs(a - b), herm_max_abs(a - e), herm_max_abs(b - e)});
    });

    c.add("step-halving", "cubic curve error scales as h^2", 0.3334, [&] {
        auto gen = seeded(cfg.seed, 106);
        const Eigen::VectorXd v = random_direction(gen);
        const Eigen::VectorXd u = random_direction(gen);
        Curve cubic = straight_curve(v);
        cubic.u = u;
        const double h = 1e-3;
        const Eigen::MatrixXcd ref = duality_map(fam, straight_curve(v), 1e-5);
        const double err_h = herm_max_abs(duality_map(fam, cubic, h) - ref);
        const double err_half = herm_max_abs(duality_map(fam, cubic, 0.5 * h) - ref);
        return std::abs(err_h / err_half - 4.0);
    });

    c.add("realization", "Omega(v) rho = -(i/hbar)[D(v), rho]", 1e-8, [&] {
        auto gen = seeded(cfg.seed, 107);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Eigen::VectorXd v = random_direction(gen);
            const Eigen::MatrixXcd rho =
                random_density(d, static_cast<unsigned>(1000 + i));
            worst = std::max(worst, realization_defect(fam, v, rho));
        }
        return worst;
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// lattice: the transform pair and its exactness
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_lattice(const RunConfig &cfg) {
    Collector c{"lattice", {}};
    const Lab lab = make_lab(cfg);
    const Grid &g = lab.g1;
    const State psi = lab.one(0);

    c.add("parseval", "sum |psi|^2 dx = sum |psihat|^2 dp", cfg.tol_exact, [&] {
        const auto mom = to_momentum(psi);
        double pos = 0.0, momm = 0.0;
        for (const cplx &a : psi.amp)
            pos += std::norm(a);
        for (const cplx &a : mom)
            momm += std::norm(a);
        pos *= volume_element(g);
        momm *= std::pow(g.dp(), g.dims);
        return std::abs(pos - momm);
    });

    c.add("roundtrip", "inverse transform undoes the transform", cfg.tol_exact, [&] {
        const State back = from_momentum(g, psi.two_s, to_momentum(psi));
        return max_abs_diff(back, psi);
    });

    c.add("plane-wave-delta", "a lattice plane wave hits a single slot", cfg.tol_exact, [&] {
        const int slot = g.n / 2 + 3;
        const double p = g.momentum(slot);
        State pw = make_state(g, 0);
        const double amp = 1.0 / std::sqrt(g.length);
        for (int kk = 0; kk < g.n; ++kk)
            pw.amp[static_cast<std::size_t>(kk)] =
                std::polar(amp, p * g.coord(kk) / g.hbar);
        const auto mom = to_momentum(pw);
        double off = 0.0, on = 0.0;
        for (int q = 0; q < g.n; ++q) {
            const double mass = std::norm(mom[static_cast<std::size_t>(q)]) * g.dp();
            if (q == slot)
                on = mass;
            else
                off += mass;
        }
        return std::max(off, std::abs(on - 1.0));
    });

    c.add("gaussian-spectrum", "transformed gaussian matches the closed form", cfg.tol_exact,
          [&] {
              const double sigma = 1.0, x0 = 2.0, p0 = 1.5;
              GaussianSpec spec;
              spec.center = {x0, 0.0, 0.0};
              spec.momentum = {p0, 0.0, 0.0};
              spec.width = {sigma, 1.0, 1.0};
              const State gs = gaussian_state(g, 0, spec);
              const auto mom = to_momentum(gs);
              const double hb = g.hbar;
              const double coeff =
                  std::pow(2.0 * sigma * sigma / (pi * hb * hb), 0.25);
              double worst = 0.0;
              for (int q = 0; q < g.n; ++q) {
                  const double p = g.momentum(q);
                  const cplx expected =
                      coeff * std::exp(-sigma * sigma * (p - p0) * (p - p0) / (hb * hb)) *
                      std::polar(1.0, -(p - p0) * x0 / hb);
                  worst = std::max(worst, std::abs(mom[static_cast<std::size_t>(q)] - expected));
              }
              return worst;
          });

    c.add("grid-duality", "dx dp n = 2 pi hbar", cfg.tol_exact,
          [&] { return std::abs(g.dx() * g.dp() * g.n / (2.0 * pi * g.hbar) - 1.0); });

    return c.out;
}

// ---------------------------------------------------------------------------
// spin-cover: the double cover and the spin blocks
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_spin_cover(const RunConfig &cfg) {
    Collector c{"spin-cover", {}};

    const auto scaled = [](const SpinMatrix &a, cplx factor) {
        SpinMatrix out = a;
        for (auto &e : out.m)
            e *= factor;
        return out;
    };
    const auto minus = [&](const SpinMatrix &a) { return scaled(a, cplx{-1.0, 0.0}); };
    const auto subtract = [](const SpinMatrix &a, const SpinMatrix &b) {
        SpinMatrix out = a;
        for (std::size_t i = 0; i < out.m.size(); ++i)
            out.m[i] -= b.m[i];
        return out;
    };
    const auto add_scaled = [](SpinMatrix &acc, const SpinMatrix &a, cplx factor) {
        for (std::size_t i = 0; i < acc.m.size(); ++i)
            acc.m[i] += factor * a.m[i];
    };

    c.add("half-turn-sign", "spin 1/2 picks up -1 on a full turn", 0.0, [&] {
        return spin_max_abs_diff(spin_rotation(1, quat_full_turn()), minus(spin_identity(2)));
    });

    c.add("four-pi-return", "two full turns return to the identity", 0.0, [&] {
        const Quaternion two_turns = quat_mul(quat_full_turn(), quat_full_turn());
        return spin_max_abs_diff(spin_rotation(1, two_turns), spin_identity(2));
    });

    c.add("integer-spin-turn", "spin 1 is blind to a full turn", 0.0, [&] {
        return spin_max_abs_diff(spin_rotation(2, quat_full_turn()), spin_identity(3));
    });

    c.add("three-half-turn", "spin 3/2 picks up -1 on a full turn", 0.0, [&] {
        return spin_max_abs_diff(spin_rotation(3, quat_full_turn()), minus(spin_identity(4)));
    });

    c.add("unitarity", "D(u)^dag D(u) = 1", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 301);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Quaternion q = random_unit_quaternion(gen);
            for (int two_s : {0, 1, 2, 3})
                worst = std::max(worst, unitarity_defect(spin_rotation(two_s, q)));
        }
        return worst;
    });

    c.add("composition", "D(u1) D(u2) = D(u1 u2)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 302);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Quaternion q1 = random_unit_quaternion(gen);
            const Quaternion q2 = random_unit_quaternion(gen);
            for (int two_s : {1, 2, 3}) {
                const SpinMatrix lhs =
                    spin_multiply(spin_rotation(two_s, q1), spin_rotation(two_s, q2));
                const SpinMatrix rhs = spin_rotation(two_s, quat_mul(q1, q2));
                worst = std::max(worst, spin_max_abs_diff(lhs, rhs));
            }
        }
        return worst;
    });

    c.add("generator-commutators", "[S_i, S_j] = i hbar eps_ijk S_k", cfg.tol_exact, [&] {
        double worst = 0.0;
        for (int two_s : {1, 2, 3, 4}) {
            const auto s = spin_generators(two_s, cfg.hbar);
            const int idx[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
            for (const auto &t : idx) {
                const SpinMatrix comm =
                    subtract(spin_multiply(s[static_cast<std::size_t>(t[0])],
                                           s[static_cast<std::size_t>(t[1])]),
                             spin_multiply(s[static_cast<std::size_t>(t[1])],
                                           s[static_cast<std::size_t>(t[0])]));
                const SpinMatrix expected =
                    scaled(s[static_cast<std::size_t>(t[2])], cplx{0.0, cfg.hbar});
                worst = std::max(worst, spin_max_abs_diff(comm, expected));
            }
        }
        return worst;
    });

    c.add("generator-conjugation", "D(u)^dag S_i D(u) = sum_j R_ij S_j", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 303);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const Quaternion q = random_unit_quaternion(gen);
            const Mat3 r = rotation_matrix(q);
            for (int two_s : {1, 2}) {
                const SpinMatrix dmat = spin_rotation(two_s, q);
                const auto s = spin_generators(two_s, cfg.hbar);
                for (int axis = 0; axis < 3; ++axis) {
                    const SpinMatrix lhs = spin_multiply(
                        spin_adjoint(dmat),
                        spin_multiply(s[static_cast<std::size_t>(axis)], dmat));
                    SpinMatrix rhs = scaled(s[0], cplx{0.0, 0.0});
                    for (int j = 0; j < 3; ++j)
                        add_scaled(rhs, s[static_cast<std::size_t>(j)],
                                   cplx{r[static_cast<std::size_t>(axis)]
                                         [static_cast<std::size_t>(j)],
                                        0.0});
                    worst = std::max(worst, spin_max_abs_diff(lhs, rhs));
                }
            }
        }
        return worst;
    });

    c.add("octahedral-closure", "grid rotations close under products up to sign",
          cfg.tol_exact, [&] {
              const auto &oct = octahedral_rotations();
              const auto dist = [](const Quaternion &a, const Quaternion &b) {
                  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x),
                                   std::abs(a.y - b.y), std::abs(a.z - b.z)});
              };
              double worst = 0.0;
              for (const Quaternion &q1 : oct)
                  for (const Quaternion &q2 : oct) {
                      const Quaternion p = quat_mul(q1, q2);
                      double best = std::numeric_limits<double>::infinity();
                      for (const Quaternion &gq : oct) {
                          const Quaternion ng{-gq.w, -gq.x, -gq.y, -gq.z};
                          best = std::min({best, dist(p, gq), dist(p, ng)});
                      }
                      worst = std::max(worst, best);
                  }
              return worst;
          });

    return c.out;
}

// ---------------------------------------------------------------------------
// composition: exchange laws between the group factors
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_composition(const RunConfig &cfg) {
    Collector c{"composition", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    const State s1 = lab.one(10);
    const State s2 = lab.one(11);
    const State t1 = lab.three(12);

    c.add("time-translation", "T(t) U(a) T(-t) = U(a)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 401);
        std::uniform_real_distribution<double> td(-3.0, 3.0), ad(-5.0, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double t = td(gen);
            const std::array<double, 3> a{ad(gen), 0.0, 0.0};
            worst = std::max({worst, time_translation_defect(s1, t, a, ph),
                              time_translation_defect(s2, t, a, ph)});
        }
        return worst;
    });

    c.add("time-boost", "T(t) V(v) T(-t) = Z(-t v^2/2) U(-t v) V(v)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 402);
        std::uniform_real_distribution<double> td(-3.0, 3.0), vd(-1.5, 1.5);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double t = td(gen);
            const std::array<double, 3> v{vd(gen), 0.0, 0.0};
            worst = std::max({worst, time_boost_defect(s1, t, v, ph),
                              time_boost_defect(s2, t, v, ph)});
        }
        return worst;
    });

    c.add("central-period", "Z(2 pi hbar / m) = 1", cfg.tol_exact, [&] {
        const State z = apply(s1, Central{2.0 * pi * lab.g1.hbar / ph.mass}, ph);
        return norm_diff(z, s1);
    });

    c.add("central-commutation", "Z(l) commutes with U, V, T", cfg.tol_exact, [&] {
        const std::vector<GroupElement> elems{
            Translation{{1.3, 0.0, 0.0}}, Boost{{0.7, 0.0, 0.0}}, TimeShift{0.9}};
        double worst = 0.0;
        for (const GroupElement &g : elems)
            worst = std::max(worst, central_commutation_defect(s1, g, 0.37, ph));
        return worst;
    });

    c.add("central-rotation", "Z(l) commutes with R(u)", cfg.tol_exact, [&] {
        const Quaternion u = octahedral_rotations()[7];
        return central_commutation_defect(t1, Rotation{u}, 0.37, ph);
    });

    c.add("rotation-translation", "R(u) U(a) R(u)^-1 = U(Ru a)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 403);
        std::uniform_int_distribution<int> sd(-5, 5);
        double worst = 0.0;
        for (const Quaternion &u : octahedral_rotations()) {
            const std::array<int, 3> steps{sd(gen), sd(gen), sd(gen)};
            const std::array<double, 3> a = lattice_translation(lab.g3, steps);
            worst = std::max(worst, rotation_translation_defect(t1, u, a, ph));
        }
        return worst;
    });

    c.add("rotation-boost", "R(u) V(v) R(u)^-1 = V(Ru v)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 404);
        std::uniform_int_distribution<int> sd(-5, 5);
        double worst = 0.0;
        for (const Quaternion &u : octahedral_rotations()) {
            const std::array<int, 3> steps{sd(gen), sd(gen), sd(gen)};
            const std::array<double, 3> v = lattice_boost(lab.g3, steps, ph);
            worst = std::max(worst, rotation_boost_defect(t1, u, v, ph));
        }
        return worst;
    });

    c.add("rotation-time", "T(t) R(u) = R(u) T(t)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 405);
        std::uniform_real_distribution<double> td(-3.0, 3.0);
        double worst = 0.0;
        for (const Quaternion &u : octahedral_rotations())
            worst = std::max(worst, rotation_time_defect(t1, u, td(gen), ph));
        return worst;
    });

    c.add("translation-additivity", "U(a) U(b) = U(a+b)", cfg.tol_exact, [&] {
        const std::array<double, 3> a{1.7, 0.0, 0.0}, b{-0.9, 0.0, 0.0};
        const State lhs = apply(apply(s1, Translation{b}, ph), Translation{a}, ph);
        const State rhs = apply(s1, Translation{{a[0] + b[0], 0.0, 0.0}}, ph);
        return norm_diff(lhs, rhs);
    });

    c.add("boost-additivity", "V(v) V(w) = V(v+w)", cfg.tol_exact, [&] {
        const std::array<double, 3> v{0.6, 0.0, 0.0}, w{-1.1, 0.0, 0.0};
        const State lhs = apply(apply(s1, Boost{w}, ph), Boost{v}, ph);
        const State rhs = apply(s1, Boost{{v[0] + w[0], 0.0, 0.0}}, ph);
        return norm_diff(lhs, rhs);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// weyl: the exact translation-boost exchange phase
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_weyl(const RunConfig &cfg) {
    Collector c{"weyl", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;

    c.add("random-pairs", "V(v) U(a) = exp(-i m v.a/hbar) U(a) V(v)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 501);
        std::uniform_real_distribution<double> vd(-1.5, 1.5), ad(-5.0, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const State psi = lab.one(100 + static_cast<std::uint64_t>(i));
            const std::array<double, 3> v{vd(gen), 0.0, 0.0};
            const std::array<double, 3> a{ad(gen), 0.0, 0.0};
            worst = std::max(worst, weyl_defect(psi, v, a, ph));
        }
        return worst;
    });

    c.add("zero-velocity", "the exchange phase collapses at v = 0", 0.0, [&] {
        const State psi = lab.one(120);
        return weyl_defect(psi, {0.0, 0.0, 0.0}, {2.1, 0.0, 0.0}, ph);
    });

    c.add("commensurate", "m v.a = 2 pi hbar makes U and V commute", cfg.tol_exact, [&] {
        const State psi = lab.one(121);
        const double v = 1.5;
        const double a = 2.0 * pi * lab.g1.hbar / (ph.mass * v);
        return weyl_defect(psi, {v, 0.0, 0.0}, {a, 0.0, 0.0}, ph);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// localization: sharp effects, smearings, covariance
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_localization(const RunConfig &cfg) {
    Collector c{"localization", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    const Grid &g = lab.g1;

    c.add("interval-erf", "P(ball) matches the gaussian error function", 1e-8, [&] {
        const Grid ge = make_grid(1, 32768, 80.0, cfg.hbar);
        GaussianSpec spec;
        spec.center = {0.5, 0.0, 0.0};
        spec.width = {1.0, 1.0, 1.0};
        const State psi = gaussian_state(ge, 0, spec);
        const Region ball = ball_region(ge, {0.3, 0.0, 0.0}, 3.0);
        const double prob = povm_prob(psi, ball, sharp_kernel());
        const double lo = ge.coord(static_cast<int>(ball.sites.front()));
        const double hi = ge.coord(static_cast<int>(ball.sites.back()));
        const double s = 1.0 * std::numbers::sqrt2;
        const double oracle = 0.5 * (std::erf((hi + 0.5 * ge.dx() - 0.5) / s) -
                                     std::erf((lo - 0.5 * ge.dx() - 0.5) / s));
        return std::abs(prob - oracle);
    });

    c.add("additivity", "P(A u B) = P(A) + P(B) for disjoint regions", 1e-12, [&] {
        const State psi = lab.one(200);
        const Region a = ball_region(g, {-5.0, 0.0, 0.0}, 2.0);
        const Region b = ball_region(g, {5.0, 0.0, 0.0}, 3.0);
        if (!regions_disjoint(a, b))
            throw std::runtime_error("test regions overlap");
        const SmearKernel k = sharp_kernel();
        return std::abs(povm_prob(psi, region_union(a, b), k) - povm_prob(psi, a, k) -
                        povm_prob(psi, b, k));
    });

    c.add("monotonicity", "A inside B implies P(A) <= P(B)", 1e-15, [&] {
        const State psi = lab.one(200);
        const SmearKernel k = sharp_kernel();
        const double pa = povm_prob(psi, ball_region(g, {0.0, 0.0, 0.0}, 2.0), k);
        const double pb = povm_prob(psi, ball_region(g, {0.0, 0.0, 0.0}, 5.0), k);
        return std::max(0.0, pa - pb);
    });

    c.add("translation-covariance", "prob(U(a) psi, B + a) = prob(psi, B)", cfg.tol_exact,
          [&] {
              const State psi = lab.one(201);
              const Region b = ball_region(g, {1.0, 0.0, 0.0}, 2.5);
              double worst = 0.0;
              for (int steps : {-7, 3, 16}) {
                  const Translation tr{lattice_translation(g, {steps, 0, 0})};
                  worst = std::max(worst,
                                   covariance_defect(psi, b, tr, sharp_kernel(), ph));
              }
              return worst;
          });

    c.add("boost-invariance", "prob(V(v) psi, B) = prob(psi, B)", cfg.tol_exact, [&] {
        const State psi = lab.one(201);
        const Region b = ball_region(g, {1.0, 0.0, 0.0}, 2.5);
        return covariance_defect(psi, b, Boost{{0.83, 0.0, 0.0}}, sharp_kernel(), ph);
    });

    c.add("rotation-covariance", "prob(R psi, R B) = prob(psi, B)", cfg.tol_exact, [&] {
        const State psi = lab.three(202);
        const Region b = ball_region(lab.g3, {0.75, -0.375, 0.375}, 1.6);
        double worst = 0.0;
        for (const Quaternion &u : octahedral_rotations())
            worst = std::max(worst,
                             covariance_defect(psi, b, Rotation{u}, sharp_kernel(), ph));
        return worst;
    });

    const Region atom_box = ball_region(g, {0.0, 0.0, 0.0}, 5.5 * g.dx());
    const SmearKernel two_atoms = make_kernel(
        g, {{{0.0, 0.0, 0.0}, 0.5}, {{41.0 * g.dx(), 0.0, 0.0}, 0.5}});

    c.add("two-atom-norm", "half-half smearing of a small box has norm 1/2", 1e-12,
          [&] { return std::abs(povm_norm(g, atom_box, two_atoms) - 0.5); });

    c.add("two-atom-oracle", "smeared prob equals the brute-force double sum", 1e-12, [&] {
        const State psi = lab.one(203);
        return std::abs(povm_prob(psi, atom_box, two_atoms) -
                        povm_prob_bruteforce(psi, atom_box, two_atoms));
    });

    const SmearKernel three_atoms = make_kernel(
        g, {{{0.0, 0.0, 0.0}, 0.5},
            {{29.0 * g.dx(), 0.0, 0.0}, 0.3},
            {{-23.0 * g.dx(), 0.0, 0.0}, 0.2}});

    c.add("strict-smearing-bound", "genuinely smeared effects stay below norm one", 1e-12,
          [&] {
              const double n = povm_norm(g, atom_box, three_atoms);
              return std::max(0.0, n - (1.0 - 0.2));
          });

    c.add("sharp-norm-one", "sharp indicators have operator norm one", 0.0, [&] {
        auto gen = seeded(cfg.seed, 602);
        std::uniform_real_distribution<double> cd(-20.0, 20.0), sdist(1.0, 7.0);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double center = cd(gen), side = sdist(gen);
            const Region box = box_region(g, {center - 0.5 * side, 0.0, 0.0},
                                          {center + 0.5 * side, 0.0, 0.0});
            worst = std::max(worst, std::abs(povm_norm(g, box, sharp_kernel()) - 1.0));
        }
        return worst;
    });

    c.add("brute-oracle-general", "three-atom smeared prob equals the double sum", 1e-12,
          [&] {
              double worst = 0.0;
              const Region box =
                  box_region(g, {-4.0, 0.0, 0.0}, {6.5, 0.0, 0.0});
              for (std::uint64_t i = 204; i < 207; ++i) {
                  const State psi = lab.one(i);
                  worst = std::max(worst, std::abs(povm_prob(psi, box, three_atoms) -
                                                   povm_prob_bruteforce(psi, box,
                                                                        three_atoms)));
              }
              return worst;
          });

    return c.out;
}

// ---------------------------------------------------------------------------
// focusing: shrinking localization onto small balls
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_focusing(const RunConfig &cfg) {
    Collector c{"focusing", {}};
    const Lab lab = make_lab(cfg);
    const Grid &g = lab.g1;

    c.add("epsilon-ladder", "P(ball) >= 1 - eps down to eps = 1e-6", 0.0, [&] {
        double worst = 0.0;
        for (double eps : {1e-2, 1e-4, 1e-6}) {
            const FocusResult fr = focusing_state(g, 0, 2.0, eps);
            worst = std::max(worst, std::max(0.0, (1.0 - eps) - fr.achieved));
        }
        return worst;
    });

    c.add("random-boxes", "packets focus into random boxes of side >= 4", 0.0, [&] {
        auto gen = seeded(cfg.seed, 701);
        std::uniform_real_distribution<double> cd(-15.0, 15.0), sdist(4.0, 8.0);
        const double eps = 1e-4;
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double center = cd(gen), side = sdist(gen);
            const Region box = box_region(g, {center - 0.5 * side, 0.0, 0.0},
                                          {center + 0.5 * side, 0.0, 0.0});
            const FocusResult fr =
                focusing_state(g, 0, 0.5 * side - g.dx(), eps, {center, 0.0, 0.0});
            const double prob = povm_prob(fr.state, box, sharp_kernel());
            worst = std::max(worst, std::max(0.0, (1.0 - eps) - prob));
        }
        return worst;
    });

    c.add("achieved-consistency", "reported capture equals the recomputed one", 1e-15, [&] {
        const FocusResult fr = focusing_state(g, 0, 2.0, 1e-4, {3.1, 0.0, 0.0});
        const double prob =
            povm_prob(fr.state, ball_region(g, {3.1, 0.0, 0.0}, 2.0), sharp_kernel());
        return std::abs(prob - fr.achieved);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// momentum-covariance: the momentum observable under the group
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_momentum_covariance(const RunConfig &cfg) {
    Collector c{"momentum-covariance", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    const Grid &g = lab.g1;

    c.add("gaussian-erf", "P(p-ball) matches the gaussian error function", 1e-6, [&] {
        const Grid gm = make_grid(1, 16384, 2560.0, cfg.hbar);
        const double sigma = 1.0, p0 = 0.3;
        GaussianSpec spec;
        spec.momentum = {p0, 0.0, 0.0};
        spec.width = {sigma, 1.0, 1.0};
        const State psi = gaussian_state(gm, 0, spec);
        const MomentumRegion r = momentum_ball(gm, {p0, 0.0, 0.0}, 0.5);
        const double prob = momentum_prob(psi, r);
        const double sp = cfg.hbar / (2.0 * sigma);
        const double plo = gm.momentum(static_cast<int>(r.slots.front()));
        const double phi = gm.momentum(static_cast<int>(r.slots.back()));
        const double s = sp * std::numbers::sqrt2;
        const double oracle = 0.5 * (std::erf((phi + 0.5 * gm.dp() - p0) / s) -
                                     std::erf((plo - 0.5 * gm.dp() - p0) / s));
        return std::abs(prob - oracle);
    });

    const State psi = lab.one(800);
    const MomentumRegion ball = momentum_ball(g, {0.0, 0.0, 0.0}, 2.0);

    c.add("translation-invariance", "prob(U(a) psi, S) = prob(psi, S)", cfg.tol_exact, [&] {
        auto gen = seeded(cfg.seed, 801);
        std::uniform_real_distribution<double> ad(-10.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i)
            worst = std::max(worst,
                             momentum_covariance_defect(
                                 psi, ball, Translation{{ad(gen), 0.0, 0.0}}, ph));
        return worst;
    });

    c.add("boost-covariance", "prob(V(v) psi, S) = prob(psi, S + m v)", cfg.tol_exact, [&] {
        double worst = 0.0;
        for (int steps : {4, -9, 1}) {
            const Boost b{lattice_boost(g, {steps, 0, 0}, ph)};
            worst = std::max(worst, momentum_covariance_defect(psi, ball, b, ph));
        }
        return worst;
    });

    c.add("transport-node-exact", "lattice boosts shift slot masses exactly", cfg.tol_exact,
          [&] { return boost_transport_defect(psi, {5, 0, 0}, ph); });

    c.add("boost-mean-shift", "<P>(V(v) psi) = <P>(psi) - m v", cfg.tol_spectral, [&] {
        auto gen = seeded(cfg.seed, 802);
        std::uniform_real_distribution<double> vd(-1.5, 1.5);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst,
                             boost_mean_shift_defect(psi, {vd(gen), 0.0, 0.0}, ph));
        return worst;
    });

    c.add("rotation-covariance", "prob(R psi, R S) = prob(psi, S)", cfg.tol_exact, [&] {
        const State psi3 = lab.three(803);
        const MomentumRegion r3 = momentum_ball(lab.g3, {0.5, -0.5, 0.3}, 1.5);
        double worst = 0.0;
        for (const Quaternion &u : octahedral_rotations())
            worst = std::max(worst,
                             momentum_covariance_defect(psi3, r3, Rotation{u}, ph));
        return worst;
    });

    c.add("smeared-mirror", "smeared prob = sum_j w_j prob(S - y_j)", cfg.tol_exact, [&] {
        const SmearKernel k = make_momentum_kernel(
            g, {{{0.0, 0.0, 0.0}, 0.6}, {{3.0 * g.dp(), 0.0, 0.0}, 0.4}});
        const double smeared = smeared_momentum_prob(psi, ball, k);
        const double manual =
            0.6 * momentum_prob(psi, ball) +
            0.4 * momentum_prob(psi, shift_momentum_region(g, ball, {-3, 0, 0}));
        return std::abs(smeared - manual);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// momentum-continuity: refinement stability of momentum mass
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_momentum_continuity(const RunConfig &cfg) {
    Collector c{"momentum-continuity", {}};

    c.add("refinement-stability", "P(S) stable when the box doubles at fixed dx", 1e-9, [&] {
        GaussianSpec packet;
        packet.momentum = {0.4, 0.0, 0.0};
        packet.width = {1.0, 1.0, 1.0};
        const ContinuitySweep sw = momentum_continuity_sweep(2048, 320.0, cfg.hbar, packet,
                                                             {0.4, 0.0, 0.0}, 3.0, 2);
        std::FILE *f = std::fopen(csv_path(cfg, "momentum_continuity.csv").c_str(), "w");
        if (f != nullptr) {
            std::fputs("n,probability\n", f);
            for (std::size_t i = 0; i < sw.n_values.size(); ++i)
                std::fprintf(f, "%d,%.17g\n", sw.n_values[i], sw.probabilities[i]);
            std::fclose(f);
        }
        return sw.max_deviation;
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// ccr: commutation relations at expectation level
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_ccr(const RunConfig &cfg) {
    Collector c{"ccr", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    std::vector<State> states;
    for (std::uint64_t i = 0; i < 5; ++i)
        states.push_back(lab.one(900 + i));

    const Op x = position_op(0);
    const Op p = momentum_op(0);
    const Op h = hamiltonian_op(ph);
    const Op k = boost_generator_op(0, ph);
    const cplx ihbar{0.0, lab.g1.hbar};

    c.add("xp", "<[X, P]> = i hbar", cfg.tol_spectral, [&] {
        double worst = 0.0;
        for (const State &s : states)
            worst = std::max(worst, std::abs(commutator_expect(s, x, p) - ihbar));
        return worst;
    });

    c.add("kp", "<[K, P]> = i hbar m", cfg.tol_spectral, [&] {
        double worst = 0.0;
        for (const State &s : states)
            worst = std::max(worst, std::abs(commutator_expect(s, k, p) - ihbar * ph.mass));
        return worst;
    });

    c.add("hp", "<[H, P]> = 0", cfg.tol_exact, [&] {
        double worst = 0.0;
        for (const State &s : states)
            worst = std::max(worst, std::abs(commutator_expect(s, h, p)));
        return worst;
    });

    c.add("xh", "<[X, H]> = i hbar <P>/m", cfg.tol_spectral, [&] {
        double worst = 0.0;
        for (const State &s : states) {
            const cplx expected = ihbar * (mean_momentum(s, 0) / ph.mass);
            worst = std::max(worst, std::abs(commutator_expect(s, x, h) - expected));
        }
        return worst;
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// holonomy: mass from the boost-translation loop
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_holonomy(const RunConfig &cfg) {
    Collector c{"holonomy", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    LoopSpec base;
    base.dv = {0.1, 0.0, 0.0};
    base.da = {0.1, 0.0, 0.0};
    std::vector<State> states;
    for (std::uint64_t i = 0; i < 10; ++i)
        states.push_back(lab.one(1000 + i));

    c.add("phase-example", "loop phase = m dv.da / hbar", cfg.tol_exact, [&] {
        LoopSpec tiny;
        tiny.dv = {0.01, 0.0, 0.0};
        tiny.da = {0.01, 0.0, 0.0};
        const PhaseEstimate pe = loop_phase(states[0], tiny, ph);
        return std::abs(pe.phase - ph.mass * 1e-4 / lab.g1.hbar);
    });

    c.add("mass-recovery", "hbar phase / dv.da = m", 1e-9, [&] {
        const MassEstimate me = extract_mass(states, base, ph);
        return std::abs(me.mean - ph.mass) / ph.mass;
    });

    c.add("state-independence", "every state reads the same mass", 1e-10, [&] {
        const MassEstimate me = extract_mass(states, base, ph);
        return me.spread;
    });

    c.add("bilinearity", "loop phase is bilinear in (dv, da)", 1e-12, [&] {
        const double scales[5] = {1.0, std::pow(10.0, -0.5), 0.1, std::pow(10.0, -1.5),
                                  0.01};
        std::FILE *f = std::fopen(csv_path(cfg, "holonomy_bilinearity.csv").c_str(), "w");
        if (f != nullptr)
            std::fputs("scale_v,scale_a,phase\n", f);
        double worst = 0.0;
        for (double sv : scales)
            for (double sa : scales) {
                LoopSpec loop;
                loop.dv = {0.1 * sv, 0.0, 0.0};
                loop.da = {0.1 * sa, 0.0, 0.0};
                const PhaseEstimate pe = loop_phase(states[1], loop, ph);
                if (f != nullptr)
                    std::fprintf(f, "%.17g,%.17g,%.17g\n", sv, sa, pe.phase);
                const double expected = ph.mass * 0.01 * sv * sa / lab.g1.hbar;
                worst = std::max(worst, std::abs(pe.phase - expected));
            }
        if (f != nullptr)
            std::fclose(f);
        return worst;
    });

    c.add("unit-magnitude", "|<psi | W psi>| = 1", 1e-10, [&] {
        double worst = 0.0;
        for (const State &s : states)
            worst = std::max(worst, loop_phase(s, base, ph).magnitude_defect);
        return worst;
    });

    c.add("degenerate-loop", "a loop with a missing leg is the identity", 0.0, [&] {
        LoopSpec dg;
        dg.da = {0.3, 0.0, 0.0};
        return max_abs_diff(loop_apply(states[2], dg, ph), states[2]);
    });

    c.add("grid-independence", "the recovered mass does not depend on n", 1e-9, [&] {
        GaussianSpec spec;
        spec.center = {3.0, 0.0, 0.0};
        spec.momentum = {1.0, 0.0, 0.0};
        spec.width = {1.2, 1.2, 1.2};
        double worst = 0.0;
        for (int n : {128, 256, 512}) {
            const Grid gn = make_grid(1, n, 80.0, cfg.hbar);
            const State psi = gaussian_state(gn, 0, spec);
            const PhaseEstimate pe = loop_phase(psi, base, ph);
            const double mass = gn.hbar * pe.phase / 0.01;
            worst = std::max(worst, std::abs(mass - ph.mass) / ph.mass);
        }
        return worst;
    });

    c.add("kp-consistency", "loop mass equals the commutator mass", 1e-8, [&] {
        const PhaseEstimate pe = loop_phase(states[3], base, ph);
        const double mass_loop = lab.g1.hbar * pe.phase / 0.01;
        const cplx comm =
            commutator_expect(states[3], boost_generator_op(0, ph), momentum_op(0));
        const double mass_comm = comm.imag() / lab.g1.hbar;
        return std::abs(mass_loop - mass_comm);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// boost-multiplier: the boost acts as a pure position-space phase
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_boost_multiplier(const RunConfig &cfg) {
    Collector c{"boost-multiplier", {}};
    const Lab lab = make_lab(cfg);
    const State psi = random_admissible_state(lab.g1, 1, lab.prof1, cfg.seed, 1100);
    const MultiplierReport rep = boost_multiplier_check(psi, {0.37, 0.0, 0.0}, lab.ph);

    c.add("functional-form", "V(v) = exp(-i m v.x/hbar) pointwise", cfg.tol_exact,
          [&] { return rep.max_defect; });
    c.add("origin-value", "the multiplier equals 1 at x = 0", cfg.tol_exact,
          [&] { return rep.origin_defect; });
    c.add("spin-uniformity", "both spin components see the same multiplier", cfg.tol_exact,
          [&] { return rep.spin_ratio_defect; });

    return c.out;
}

// ---------------------------------------------------------------------------
// time-compatibility: time shifts against boosts and the energy offset
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_time_compatibility(const RunConfig &cfg) {
    Collector c{"time-compatibility", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;

    c.add("boost-exchange", "T(t) V(v) T(-t) = Z(-t v^2/2) U(-t v) V(v)", 1e-10, [&] {
        auto gen = seeded(cfg.seed, 1200);
        std::uniform_real_distribution<double> td(-3.0, 3.0), vd(-1.5, 1.5);
        const State psi = lab.one(1201);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i)
            worst = std::max(worst,
                             time_boost_defect(psi, td(gen), {vd(gen), 0.0, 0.0}, ph));
        return worst;
    });

    GaussianSpec travel;
    travel.center = {-8.0, 0.0, 0.0};
    travel.momentum = {2.0, 0.0, 0.0};
    travel.width = {2.0, 2.0, 2.0};

    c.add("energy-conservation", "<H>(t) = <H>(0)", 1e-12, [&] {
        const State psi = gaussian_state(lab.g1, 0, travel);
        return energy_conservation_defect(psi, 8.0, 16, ph);
    });

    c.add("offset-invariance", "trajectories ignore the energy offset", 1e-12, [&] {
        const State psi = gaussian_state(lab.g1, 0, travel);
        return energy_offset_invariance_defect(psi, 8.0, 16, ph.mass, 0.0, 3.7);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// angular-momentum: the orbital plus spin split
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_angular_momentum(const RunConfig &cfg) {
    Collector c{"angular-momentum", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;
    std::vector<State> states;
    for (std::uint64_t i = 0; i < 3; ++i)
        states.push_back(lab.three(1300 + i));

    const std::array<Op, 3> j{total_angular_op(0), total_angular_op(1), total_angular_op(2)};
    const std::array<Op, 3> l{orbital_op(0), orbital_op(1), orbital_op(2)};
    const std::array<Op, 3> s{spin_op(0), spin_op(1), spin_op(2)};
    const cplx ihbar{0.0, lab.g3.hbar};
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

    c.add("total-commutators", "<[J_i, J_j]> = i hbar eps_ijk <J_k>", cfg.tol_fit, [&] {
        double worst = 0.0;
        for (const State &psi : states)
            for (const auto &t : cyc) {
                const cplx comm = commutator_expect(psi, j[static_cast<std::size_t>(t[0])],
                                                    j[static_cast<std::size_t>(t[1])]);
                const cplx expected =
                    ihbar * expect(psi, j[static_cast<std::size_t>(t[2])]).real();
                worst = std::max(worst, std::abs(comm - expected));
            }
        return worst;
    });

    c.add("energy-commutes", "<[H, J_i]> = 0", cfg.tol_fit, [&] {
        const Op h = hamiltonian_op(ph);
        double worst = 0.0;
        for (const State &psi : states)
            for (int axis = 0; axis < 3; ++axis)
                worst = std::max(
                    worst,
                    std::abs(commutator_expect(psi, h, j[static_cast<std::size_t>(axis)])));
        return worst;
    });

    c.add("split-additivity", "<J> = <L> + <S>", 1e-12, [&] {
        double worst = 0.0;
        for (const State &psi : states)
            for (int axis = 0; axis < 3; ++axis) {
                const auto a = static_cast<std::size_t>(axis);
                worst = std::max(worst, std::abs(expect(psi, j[a]) - expect(psi, l[a]) -
                                                 expect(psi, s[a])));
            }
        return worst;
    });

    c.add("rotation-covariance", "<J>(R psi) = R <J>(psi)", cfg.tol_fit, [&] {
        const Quaternion u = octahedral_rotations()[9];
        const Mat3 r = rotation_matrix(u);
        double worst = 0.0;
        for (const State &psi : states) {
            const State rpsi = apply(psi, Rotation{u}, ph);
            for (int axis = 0; axis < 3; ++axis) {
                double expected = 0.0;
                for (int jj = 0; jj < 3; ++jj)
                    expected += r[static_cast<std::size_t>(axis)][static_cast<std::size_t>(jj)] *
                                expect(psi, j[static_cast<std::size_t>(jj)]).real();
                worst = std::max(
                    worst,
                    std::abs(expect(rpsi, j[static_cast<std::size_t>(axis)]).real() -
                             expected));
            }
        }
        return worst;
    });

    c.add("spin-commutators", "<[S_i, S_j]> = i hbar eps_ijk <S_k>", 1e-12, [&] {
        double worst = 0.0;
        for (const State &psi : states)
            for (const auto &t : cyc) {
                const cplx comm = commutator_expect(psi, s[static_cast<std::size_t>(t[0])],
                                                    s[static_cast<std::size_t>(t[1])]);
                const cplx expected =
                    ihbar * expect(psi, s[static_cast<std::size_t>(t[2])]).real();
                worst = std::max(worst, std::abs(comm - expected));
            }
        return worst;
    });

    c.add("orbital-commutators", "<[L_i, L_j]> = i hbar eps_ijk <L_k>", cfg.tol_fit, [&] {
        double worst = 0.0;
        for (const State &psi : states)
            for (const auto &t : cyc) {
                const cplx comm = commutator_expect(psi, l[static_cast<std::size_t>(t[0])],
                                                    l[static_cast<std::size_t>(t[1])]);
                const cplx expected =
                    ihbar * expect(psi, l[static_cast<std::size_t>(t[2])]).real();
                worst = std::max(worst, std::abs(comm - expected));
            }
        return worst;
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// casimir: the invariant scalar 2mH - P^2
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_casimir(const RunConfig &cfg) {
    Collector c{"casimir", {}};
    const Lab lab = make_lab(cfg);
    std::vector<State> states;
    for (std::uint64_t i = 1400; i < 1403; ++i)
        states.push_back(lab.one(i));
    for (std::uint64_t i = 1403; i < 1405; ++i)
        states.push_back(lab.three(i));

    c.add("scalar-value", "<2mH - P^2> = 2 m E0", 1e-10, [&] {
        return casimir_expectation_defect(states, Physics{cfg.mass, cfg.energy_offset});
    });

    c.add("scalar-value-offset", "<2mH - P^2> = 2 m E0 at E0 = 3.7", 1e-10, [&] {
        return casimir_expectation_defect(states, Physics{cfg.mass, 3.7});
    });

    c.add("element-commutation", "2mH - P^2 commutes with U, V, T, R, Z", 1e-10, [&] {
        const Physics ph{cfg.mass, 3.7};
        const std::vector<State> s3{states[3], states[4]};
        const std::vector<GroupElement> elems{
            Translation{lattice_translation(lab.g3, {2, -1, 3})},
            Boost{{0.6, -0.3, 0.2}},
            TimeShift{0.7},
            Rotation{octahedral_rotations()[13]},
            Central{0.37}};
        return casimir_commutation_defect(s3, elems, ph);
    });

    return c.out;
}

// ---------------------------------------------------------------------------
// dynamics: free motion at expectation level
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_dynamics(const RunConfig &cfg) {
    Collector c{"dynamics", {}};
    const Lab lab = make_lab(cfg);
    const Physics ph = lab.ph;

    GaussianSpec travel;
    travel.center = {-8.0, 0.0, 0.0};
    travel.momentum = {2.0, 0.0, 0.0};
    travel.width = {2.0, 2.0, 2.0};
    const State moving = gaussian_state(lab.g1, 0, travel);
    const Trajectory tr = heisenberg_trajectory(moving, 8.0, 32, ph);
    write_trajectory_csv(tr, csv_path(cfg, "trajectory.csv"));

    std::vector<double> mean_x(tr.times.size());
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        mean_x[i] = tr.mean_x[i][0];
    const LineFit fit = fit_line(tr.times, mean_x);

    c.add("velocity-slope", "d<X>/dt = <P>/m", 1e-6, [&] {
        return std::abs(fit.slope - mean_momentum(moving, 0) / ph.mass);
    });

    c.add("straight-line", "<X>(t) stays on a straight line", 1e-8,
          [&] { return fit.max_residual; });

    c.add("stationary-mean", "<X> is constant for a packet at rest", 1e-10, [&] {
        GaussianSpec rest;
        rest.center = {3.0, 0.0, 0.0};
        rest.width = {1.5, 1.5, 1.5};
        const State psi = gaussian_state(lab.g1, 0, rest);
        const Trajectory rt = heisenberg_trajectory(psi, 8.0, 16, ph);
        double worst = 0.0;
        for (const auto &mx : rt.mean_x)
            worst = std::max(worst, std::abs(mx[0] - rt.mean_x.front()[0]));
        return worst;
    });

    c.add("momentum-conservation", "<P>(t) = <P>(0)", 1e-12, [&] {
        double worst = 0.0;
        for (const auto &mp : tr.mean_p)
            worst = std::max(worst, std::abs(mp[0] - tr.mean_p.front()[0]));
        return worst;
    });

    c.add("variance-growth", "Var X(t) = Var X(0) + t^2 Var P / m^2", 1e-6,
          [&] { return variance_growth_defect(moving, 8.0, 16, ph); });

    GaussianSpec rest0;
    rest0.width = {1.5, 1.5, 1.5};

    c.add("boost-drift-magnitude", "a boosted rest packet drifts by |v| t", 1e-6, [&] {
        const State psi = gaussian_state(lab.g1, 0, rest0);
        const State moved =
            apply_word(psi, {TimeShift{2.0}, Boost{{1.0, 0.0, 0.0}}}, ph);
        const double drift = mean_position(moved, 0) - mean_position(psi, 0);
        return std::abs(std::abs(drift) - 1.0 * 2.0);
    });

    c.add("boost-drift-formula", "<X>(t) = x0 + (p0/m - v) t after a boost", 1e-6, [&] {
        const State psi = gaussian_state(lab.g1, 0, rest0);
        return boost_then_evolve_defect(psi, {1.0, 0.0, 0.0}, 2.0, ph);
    });

    c.add("boost-zero-time", "a boost alone leaves <X> unchanged", 1e-10, [&] {
        const State psi = gaussian_state(lab.g1, 0, rest0);
        return boost_then_evolve_defect(psi, {1.0, 0.0, 0.0}, 0.0, ph);
    });

    return c.out;
}

int worker_count() {
    if (const char *env = std::getenv("GALILEI_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

} // namespace

const std::vector<SuiteDef> &suite_catalogue() {
    static const std::vector<SuiteDef> catalogue = {
        {"duality", suite_duality},
        {"lattice", suite_lattice},
        {"spin-cover", suite_spin_cover},
        {"composition", suite_composition},
        {"weyl", suite_weyl},
        {"localization", suite_localization},
        {"focusing", suite_focusing},
        {"momentum-covariance", suite_momentum_covariance},
        {"momentum-continuity", suite_momentum_continuity},
        {"ccr", suite_ccr},
        {"holonomy", suite_holonomy},
        {"boost-multiplier", suite_boost_multiplier},
        {"time-compatibility", suite_time_compatibility},
        {"angular-momentum", suite_angular_momentum},
        {"casimir", suite_casimir},
        {"dynamics", suite_dynamics},
    };
    return catalogue;
}

bool suite_exists(const std::string &name) {
    for (const SuiteDef &d : suite_catalogue())
        if (d.name == name)
            return true;
    return false;
}

Report run_suites(const RunConfig &cfg) {
    validate(cfg);

    bool want_all = false;
    for (const std::string &s : cfg.suites) {
        if (s == "all") {
            want_all = true;
            continue;
        }
        if (!suite_exists(s))
            throw std::invalid_argument("unknown suite: " + s);
    }

    std::vector<const SuiteDef *> selected;
    for (const SuiteDef &d : suite_catalogue()) {
        const bool wanted =
            want_all || std::find(cfg.suites.begin(), cfg.suites.end(), d.name) !=
                            cfg.suites.end();
        if (wanted)
            selected.push_back(&d);
    }

    std::filesystem::create_directories(cfg.csv_dir);

    static std::counting_semaphore<64> slots(0);
    // Top the semaphore up to the configured worker count for this run.
    const int workers = worker_count();
    for (int i = 0; i < workers; ++i)
        slots.release();

    std::vector<std::future<std::vector<CheckResult>>> futures;
    futures.reserve(selected.size());
    for (const SuiteDef *def : selected)
        futures.push_back(std::async(std::launch::async, [def, &cfg] {
            slots.acquire();
            struct Return {
                std::counting_semaphore<64> &s;
                ~Return() { s.release(); }
            } give_back{slots};
            return def->run(cfg);
        }));

    Report rep;
    rep.version = version_string;
    rep.schema = report_schema;
    rep.config = cfg;
    rep.all_pass = true;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        std::vector<CheckResult> results;
        try {
            results = futures[i].get();
        } catch (const std::exception &e) {
            CheckResult broken;
            broken.suite = selected[i]->name;
            broken.name = "setup";
            broken.anchor = std::string("suite executed [threw: ") + e.what() + "]";
            broken.measured = std::numeric_limits<double>::infinity();
            broken.tolerance = 0.0;
            broken.pass = false;
            results.push_back(std::move(broken));
        }
        for (CheckResult &r : results) {
            rep.all_pass = rep.all_pass && r.pass;
            rep.results.push_back(std::move(r));
        }
    }

    // Drain what this run released so repeated calls start from zero.
    for (int i = 0; i < workers; ++i)
        slots.acquire();

    return rep;
}

} // namespace galilei
