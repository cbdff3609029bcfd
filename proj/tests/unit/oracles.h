// Copyright 2026 The fluxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXLAB_TESTS_ORACLES_H
#define FLUXLAB_TESTS_ORACLES_H

// Independent reference computations used by the unit tests. None of these
// share code with the library: the spectrum is solved on a real-space phase
// grid instead of the oscillator basis, and integrals use plain trapezoids.

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

#include "fluxlab/fluxonium.h"

namespace oracle {

struct GridLevels {
    Eigen::VectorXd energies;
    /// <i| phi - 2 pi Phi |j> on the grid.
    Eigen::MatrixXd reduced_phase;
};

// 4 E_C n^2 + (E_L/2) x^2 - E_J cos(x + 2 pi Phi), x = phi - 2 pi Phi, with
// a five-point second derivative on [-L, L].
inline GridLevels grid_levels(const fluxlab::QubitParams &q, double flux, int k, int points = 401, double half_width = 20.0) {
    const double two_pi_flux = 2.0 * std::numbers::pi * flux;
    const double h = 2.0 * half_width / (points - 1);
    const double t = 4.0 * q.e_c_ghz / (h * h);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(points, points);
    Eigen::VectorXd x(points);
    for (int i = 0; i < points; ++i) {
        x[i] = -half_width + i * h;
        H(i, i) = 2.5 * t + 0.5 * q.e_l_ghz * x[i] * x[i] - q.e_j_ghz * std::cos(x[i] + two_pi_flux);
        if (i + 1 < points) H(i, i + 1) = H(i + 1, i) = -4.0 / 3.0 * t;
        if (i + 2 < points) H(i, i + 2) = H(i + 2, i) = 1.0 / 12.0 * t;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    Eigen::MatrixXd v = es.eigenvectors().leftCols(k);
    return {es.eigenvalues().head(k), v.transpose() * x.asDiagonal() * v};
}

// ZZ shift from grid levels: K x K product space, labels by largest overlap.
inline double grid_zeta(const fluxlab::QubitParams &qa, const fluxlab::QubitParams &qb, double j_bare, double fa, double fb, int K) {
    auto a = grid_levels(qa, fa, K);
    auto b = grid_levels(qb, fb, K);
    const int n = K * K;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            for (int k = 0; k < K; ++k)
                for (int l = 0; l < K; ++l) {
                    double v = j_bare * a.reduced_phase(i, k) * b.reduced_phase(j, l);
                    if (i == k && j == l) v += a.energies[i] + b.energies[j];
                    H(i * K + j, k * K + l) = v;
                }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    auto energy_of = [&](int bare) {
        Eigen::Index best;
        es.eigenvectors().row(bare).cwiseAbs().maxCoeff(&best);
        return es.eigenvalues()[best];
    };
    return energy_of(K + 1) - energy_of(K) - energy_of(1) + energy_of(0);
}

// Composite trapezoid on n equal panels.
inline double trapezoid(const std::function<double(double)> &f, double a, double b, long n) {
    double h = (b - a) / static_cast<double>(n);
    double s = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n; ++i) s += f(a + h * static_cast<double>(i));
    return s * h;
}

}  // namespace oracle

#endif  // FLUXLAB_TESTS_ORACLES_H
