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
 * @file duality.hpp
 * A finite-dimensional model of reading generators back off a parametrized
 * family of reversible dynamics.
 *
 * The family is A(theta) = sum_k theta_k A_k + c(theta) I on C^D, with c an
 * arbitrary gauge scalar. Differentiating the commutator superoperator
 * rho -> -(i/hbar)[A(theta(eps)), rho] along a curve through zero and
 * contracting the result recovers the traceless part of the velocity
 * sum_k v_k A_k; the gauge line drops out identically. Curves may carry
 * quadratic and cubic reparametrization terms, which a central difference
 * must suppress.
 *
 * Superoperators are stored as D^2 x D^2 matrices over column-major
 * vectorization: vec(X rho Y) = (Y^T (x) X) vec(rho).
 */

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace galilei {

struct DualityFamily {
    int dim = 0;                           // D
    double hbar = 1.0;
    std::vector<Eigen::MatrixXcd> basis;   // generator directions A_k
    std::function<double(const Eigen::VectorXd &)> gauge; // c(theta), may be null

    int directions() const { return static_cast<int>(basis.size()); }

    /// A(theta) = sum_k theta_k A_k + c(theta) I.
    Eigen::MatrixXcd evaluate(const Eigen::VectorXd &theta) const;
};

/**
 * Raw constructor: checks Hermiticity of every direction and nothing else,
 * so deliberately degenerate families stay constructible.
 */
DualityFamily make_family(int dim, std::vector<Eigen::MatrixXcd> basis, double hbar = 1.0,
                          std::function<double(const Eigen::VectorXd &)> gauge = nullptr);

/// Seeded family with an orthonormal (Hilbert-Schmidt) traceless Hermitian basis.
DualityFamily standard_family(int dim = 8, int directions = 10, unsigned seed = 20260825);

/// Copy of f with direction 1 replaced by direction 0 (collapses the span).
DualityFamily with_duplicate_direction(const DualityFamily &f);

/// Copy of f with direction 1 replaced by direction 0 plus 3 I (same traceless part).
DualityFamily with_trace_shifted_duplicate(const DualityFamily &f);

/// theta(eps) = eps v + eps^2 w + eps^3 u.
struct Curve {
    Eigen::VectorXd v, w, u;
};

Curve straight_curve(const Eigen::VectorXd &v);

/**
 * Central-difference derivative of the commutator superoperator along the
 * curve at eps = 0, as a D^2 x D^2 matrix. Step h must lie in [1e-7, 1e-3].
 */
Eigen::MatrixXcd connection_superop(const DualityFamily &f, const Curve &curve, double h = 1e-5);

Eigen::MatrixXcd connection_superop(const DualityFamily &f, const Eigen::VectorXd &v,
                                    double h = 1e-5);

/// Traceless Hermitian generator recovered from the connection superoperator.
Eigen::MatrixXcd duality_map(const DualityFamily &f, const Curve &curve, double h = 1e-5);

Eigen::MatrixXcd duality_map(const DualityFamily &f, const Eigen::VectorXd &v, double h = 1e-5);

/// Numerical rank of the map restricted to the coordinate directions.
int injectivity_rank(const DualityFamily &f, double h = 1e-5);

/**
 * || Omega(v) vec(rho) - vec(-(i/hbar)[D(v), rho]) ||: the recovered
 * generator must reproduce the superoperator's action on states.
 */
double realization_defect(const DualityFamily &f, const Eigen::VectorXd &v,
                          const Eigen::MatrixXcd &rho, double h = 1e-5);

/// Seeded random density matrix (positive, unit trace).
Eigen::MatrixXcd random_density(int dim, unsigned seed);

double herm_max_abs(const Eigen::MatrixXcd &a);

} // namespace galilei
