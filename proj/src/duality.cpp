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

#include "galilei/duality.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace galilei {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

constexpr std::complex<double> I_UNIT{0.0, 1.0};

/// vec(X rho Y^T) = (Y (x) X) vec(rho), column-major throughout.
Mat commutator_superop(const Mat &a, double hbar) {
    const long d = a.rows();
    const Mat eye = Mat::Identity(d, d);
    return (-I_UNIT / hbar) *
           (Eigen::kroneckerProduct(eye, a) - Eigen::kroneckerProduct(a.transpose(), eye));
}

Vec curve_point(const Curve &curve, double eps) {
    return eps * curve.v + (eps * eps) * curve.w + (eps * eps * eps) * curve.u;
}

} // namespace

Eigen::MatrixXcd DualityFamily::evaluate(const Eigen::VectorXd &theta) const {
    if (theta.size() != directions())
        throw std::invalid_argument("parameter vector size mismatch");
    Mat a = Mat::Zero(dim, dim);
    for (int k = 0; k < directions(); ++k)
        a += theta[k] * basis[static_cast<std::size_t>(k)];
    if (gauge)
        a += gauge(theta) * Mat::Identity(dim, dim);
    return a;
}

DualityFamily make_family(int dim, std::vector<Eigen::MatrixXcd> basis, double hbar,
                          std::function<double(const Eigen::VectorXd &)> gauge) {
    if (dim < 2)
        throw std::invalid_argument("family dimension must be at least 2");
    if (basis.empty())
        throw std::invalid_argument("family needs at least one direction");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::invalid_argument("hbar must be positive and finite");
    for (const Mat &a : basis) {
        if (a.rows() != dim || a.cols() != dim)
            throw std::invalid_argument("direction shape mismatch");
        if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("directions must be Hermitian");
    }
    DualityFamily f;
    f.dim = dim;
    f.hbar = hbar;
    f.basis = std::move(basis);
    f.gauge = std::move(gauge);
    return f;
}

DualityFamily standard_family(int dim, int directions, unsigned seed) {
    if (directions < 1 || directions > dim * dim - 1)
        throw std::invalid_argument("direction count out of range");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);

    std::vector<Mat> basis;
    basis.reserve(static_cast<std::size_t>(directions));
    while (static_cast<int>(basis.size()) < directions) {
        Mat g(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                g(r, c) = std::complex<double>{dist(gen), dist(gen)};
        Mat h = 0.5 * (g + g.adjoint());
        h -= (h.trace() / static_cast<double>(dim)) * Mat::Identity(dim, dim);
        // Gram-Schmidt in the Hilbert-Schmidt inner product.
        for (const Mat &b : basis)
            h -= (b.adjoint() * h).trace() * b;
        const double norm = std::sqrt(std::abs((h.adjoint() * h).trace()));
        if (norm < 1e-8)
            continue;
        h /= norm;
        // Re-hermitize: Gram-Schmidt coefficients are real up to rounding.
        h = 0.5 * (h + h.adjoint());
        basis.push_back(std::move(h));
    }
    return make_family(dim, std::move(basis));
}

DualityFamily with_duplicate_direction(const DualityFamily &f) {
    if (f.directions() < 2)
        throw std::invalid_argument("need at least two directions to duplicate");
    DualityFamily g = f;
    g.basis[1] = g.basis[0];
    return g;
}

DualityFamily with_trace_shifted_duplicate(const DualityFamily &f) {
    if (f.directions() < 2)
        throw std::invalid_argument("need at least two directions to duplicate");
    DualityFamily g = f;
    g.basis[1] = g.basis[0] + 3.0 * Mat::Identity(f.dim, f.dim);
    return g;
}

Curve straight_curve(const Eigen::VectorXd &v) {
    Curve c;
    c.v = v;
    c.w = Vec::Zero(v.size());
    c.u = Vec::Zero(v.size());
    return c;
}

Eigen::MatrixXcd connection_superop(const DualityFamily &f, const Curve &curve, double h) {
    if (!(h >= 1e-7 && h <= 1e-3))
        throw std::invalid_argument("difference step outside [1e-7, 1e-3]");
    const int k = f.directions();
    if (curve.v.size() != k || curve.w.size() != k || curve.u.size() != k)
        throw std::invalid_argument("curve coefficient size mismatch");
    const Mat plus = commutator_superop(f.evaluate(curve_point(curve, h)), f.hbar);
    const Mat minus = commutator_superop(f.evaluate(curve_point(curve, -h)), f.hbar);
    return (plus - minus) / (2.0 * h);
}

Eigen::MatrixXcd connection_superop(const DualityFamily &f, const Eigen::VectorXd &v, double h) {
    return connection_superop(f, straight_curve(v), h);
}

Eigen::MatrixXcd duality_map(const DualityFamily &f, const Curve &curve, double h) {
    const Mat omega = connection_superop(f, curve, h);
    const int d = f.dim;
    // Sum of diagonal blocks contracts the superoperator back to a matrix:
    // for omega = -(i/hbar)[B, .] the sum equals -(i/hbar)(D B - tr(B) I).
    Mat t = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j)
        t += omega.block(j * d, j * d, d, d);
    Mat out = (I_UNIT * f.hbar / static_cast<double>(d)) * t;
    out = 0.5 * (out + out.adjoint());
    out -= (out.trace() / static_cast<double>(d)) * Mat::Identity(d, d);
    return out;
}

Eigen::MatrixXcd duality_map(const DualityFamily &f, const Eigen::VectorXd &v, double h) {
    return duality_map(f, straight_curve(v), h);
}

int injectivity_rank(const DualityFamily &f, double h) {
    const int k = f.directions();
    const int d = f.dim;
    Eigen::MatrixXcd m(d * d, k);
    for (int j = 0; j < k; ++j) {
        Vec e = Vec::Zero(k);
        e[j] = 1.0;
        const Mat image = duality_map(f, e, h);
        m.col(j) = Eigen::Map<const Eigen::VectorXcd>(image.data(), d * d);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 0.0)
        return 0;
    int rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv[i] > 1e-7 * sv[0])
            ++rank;
    return rank;
}

double realization_defect(const DualityFamily &f, const Eigen::VectorXd &v,
                          const Eigen::MatrixXcd &rho, double h) {
    if (rho.rows() != f.dim || rho.cols() != f.dim)
        throw std::invalid_argument("state shape mismatch");
    const int d = f.dim;
    const Mat omega = connection_superop(f, v, h);
    const Mat gen = duality_map(f, v, h);
    const Eigen::VectorXcd direct =
        omega * Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    const Mat comm = (-I_UNIT / f.hbar) * (gen * rho - rho * gen);
    const Eigen::VectorXcd reproduced = Eigen::Map<const Eigen::VectorXcd>(comm.data(), d * d);
    return (direct - reproduced).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd random_density(int dim, unsigned seed) {
    if (dim < 1)
        throw std::invalid_argument("dimension must be positive");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Mat g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            g(r, c) = std::complex<double>{dist(gen), dist(gen)};
    Mat rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

double herm_max_abs(const Eigen::MatrixXcd &a) { return a.cwiseAbs().maxCoeff(); }

} // namespace galilei
