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

#include "fluxlab/fluxonium.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"
#include "least_squares.h"

namespace fluxlab {
namespace {

// Eigen-decomposition of the dimensionless position operator (a + a^dagger)
// in an auxiliary oscillator basis. Its eigenvalues are Gauss-Hermite nodes,
// so V diag(f(x_k)) V^T restricted to the leading block gives matrix
// elements of f(x) that converge exponentially in the auxiliary size.
struct PositionGrid {
    Eigen::VectorXd nodes;
    Eigen::MatrixXd vectors;
};

std::shared_ptr<const PositionGrid> position_grid(int size) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const PositionGrid>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(size);
    if (it != cache.end()) {
        return it->second;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(size);
    Eigen::VectorXd sub(size - 1);
    for (int i = 0; i < size - 1; ++i) {
        sub[i] = std::sqrt(static_cast<double>(i + 1));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericError("position operator diagonalization failed");
    }
    auto grid = std::make_shared<PositionGrid>();
    grid->nodes = solver.eigenvalues();
    grid->vectors = solver.eigenvectors();
    cache.emplace(size, grid);
    return grid;
}

void check_basis(int n_basis) {
    if (n_basis < kMinBasisSize) {
        throw ParameterError("n_basis must be at least 20, got " + std::to_string(n_basis));
    }
}

// Zero-point amplitude of phi in the LC mode: phi = phi_zpf (a + a^dagger).
double phase_zpf(const QubitParams &p) {
    return std::pow(2.0 * p.e_c_ghz / p.e_l_ghz, 0.25);
}

double lc_frequency(const QubitParams &p) {
    return std::sqrt(8.0 * p.e_c_ghz * p.e_l_ghz);
}

Eigen::MatrixXd real_hamiltonian(const QubitParams &p, double flux, int n_basis, JosephsonSign sign) {
    p.validate();
    check_basis(n_basis);
    if (!std::isfinite(flux)) {
        throw ParameterError("flux must be finite");
    }
    auto grid = position_grid(2 * n_basis);
    double zpf = phase_zpf(p);
    double offset = units::flux_phase(flux);
    Eigen::VectorXd cos_nodes = (zpf * grid->nodes.array() + offset).cos().matrix();
    auto top = grid->vectors.topRows(n_basis);
    Eigen::MatrixXd cos_phi = top * cos_nodes.asDiagonal() * top.transpose();

    double josephson = sign == JosephsonSign::kNegative ? -p.e_j_ghz : p.e_j_ghz;
    Eigen::MatrixXd h = josephson * cos_phi;
    double omega = lc_frequency(p);
    for (int n = 0; n < n_basis; ++n) {
        h(n, n) += omega * (n + 0.5);
    }
    h = 0.5 * (h + h.transpose()).eval();
    // At integer or half-integer flux cos(phi) is even in phi - 2 pi Phi, so
    // even and odd oscillator states do not mix; drop the rounding residue.
    if (std::remainder(2.0 * flux, 1.0) == 0.0) {
        for (int j = 0; j < n_basis; ++j) {
            for (int i = (j + 1) % 2; i < n_basis; i += 2) {
                h(i, j) = 0.0;
            }
        }
    }
    return h;
}

// phi - 2 pi Phi in the oscillator basis.
Eigen::MatrixXd reduced_phase_operator(const QubitParams &p, int n_basis) {
    double zpf = phase_zpf(p);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_basis, n_basis);
    for (int i = 0; i + 1 < n_basis; ++i) {
        x(i, i + 1) = x(i + 1, i) = zpf * std::sqrt(static_cast<double>(i + 1));
    }
    return x;
}

template <typename Matrix>
void fix_gauge(Matrix &states) {
    for (Eigen::Index c = 0; c < states.cols(); ++c) {
        Eigen::Index best = 0;
        double best_mag = -1.0;
        for (Eigen::Index r = 0; r < states.rows(); ++r) {
            double mag = std::abs(states(r, c));
            // Strict comparison with a relative guard keeps the lowest index on ties.
            if (mag > best_mag * (1.0 + 1e-12)) {
                best_mag = mag;
                best = r;
            }
        }
        auto pivot = states(best, c);
        states.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
}

struct RealEigen {
    Eigen::VectorXd energies;
    Eigen::MatrixXd states;
};

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigensolver did not converge (dimension " << h.rows() << ", max |H_ij| " << h.cwiseAbs().maxCoeff()
            << ")";
        throw NumericError(msg.str());
    }
    return solver;
}

// True when no entry couples even and odd oscillator states.
bool has_parity_blocks(const Eigen::MatrixXd &h) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
        for (Eigen::Index i = (j + 1) % 2; i < h.rows(); i += 2) {
            if (h(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

// Diagonalizes the even and odd sectors separately so eigenvectors carry
// exact zeros in the other sector, then merges by energy.
RealEigen parity_eigensystem(const Eigen::MatrixXd &h, int k) {
    Eigen::Index n = h.rows();
    Eigen::Index n_even = (n + 1) / 2;
    Eigen::Index n_odd = n / 2;
    Eigen::MatrixXd even(n_even, n_even);
    Eigen::MatrixXd odd(n_odd, n_odd);
    for (Eigen::Index i = 0; i < n_even; ++i) {
        for (Eigen::Index j = 0; j < n_even; ++j) {
            even(i, j) = h(2 * i, 2 * j);
        }
    }
    for (Eigen::Index i = 0; i < n_odd; ++i) {
        for (Eigen::Index j = 0; j < n_odd; ++j) {
            odd(i, j) = h(2 * i + 1, 2 * j + 1);
        }
    }
    auto se = solve_symmetric(even);
    auto so = solve_symmetric(odd);
    RealEigen out{Eigen::VectorXd(k), Eigen::MatrixXd::Zero(n, k)};
    Eigen::Index ie = 0;
    Eigen::Index io = 0;
    // Row of the largest component, in the full basis.
    auto lead = [](const Eigen::MatrixXd &v, Eigen::Index col, Eigen::Index offset) {
        Eigen::Index r = 0;
        v.col(col).cwiseAbs().maxCoeff(&r);
        return 2 * r + offset;
    };
    for (int c = 0; c < k; ++c) {
        bool take_even = io >= n_odd;
        if (!take_even && ie < n_even) {
            double ev = se.eigenvalues()[ie], ov = so.eigenvalues()[io];
            // Exact ties (degenerate sectors) go to the lower leading index.
            take_even = ev < ov || (ev == ov && lead(se.eigenvectors(), ie, 0) < lead(so.eigenvectors(), io, 1));
        }
        if (take_even) {
            out.energies[c] = se.eigenvalues()[ie];
            for (Eigen::Index i = 0; i < n_even; ++i) {
                out.states(2 * i, c) = se.eigenvectors()(i, ie);
            }
            ++ie;
        } else {
            out.energies[c] = so.eigenvalues()[io];
            for (Eigen::Index i = 0; i < n_odd; ++i) {
                out.states(2 * i + 1, c) = so.eigenvectors()(i, io);
            }
            ++io;
        }
    }
    return out;
}

RealEigen real_eigensystem(const Eigen::MatrixXd &h, int k) {
    RealEigen out;
    if (has_parity_blocks(h)) {
        out = parity_eigensystem(h, k);
    } else {
        auto solver = solve_symmetric(h);
        out = {solver.eigenvalues().head(k), solver.eigenvectors().leftCols(k)};
    }
    for (Eigen::Index c = 0; c < out.states.cols(); ++c) {
        Eigen::Index best = 0;
        double best_mag = -1.0;
        for (Eigen::Index r = 0; r < out.states.rows(); ++r) {
            double mag = std::abs(out.states(r, c));
            if (mag > best_mag * (1.0 + 1e-12)) {
                best_mag = mag;
                best = r;
            }
        }
        if (out.states(best, c) < 0) {
            out.states.col(c) *= -1.0;
        }
    }
    return out;
}

}  // namespace

void QubitParams::validate() const {
    if (!(e_c_ghz > 0.0) || !(e_l_ghz > 0.0) || !(e_j_ghz > 0.0)) {
        throw ParameterError("qubit " + label + ": E_C, E_L and E_J must be strictly positive");
    }
    if (!(e_j_ghz > e_l_ghz)) {
        throw ParameterError("qubit " + label + ": fluxonium regime requires E_J > E_L");
    }
}

QubitParams QubitParams::qubit_a() {
    return {1.61, 0.45, 2.89, "A"};
}

QubitParams QubitParams::qubit_b() {
    return {1.24, 0.45, 2.68, "B"};
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw ParameterError("Hermitian operator must be a non-empty square matrix");
    }
    double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= 1e-12 * scale)) {
        throw ParameterError("matrix is not Hermitian (max |H - H^dagger| = " + std::to_string(asym) + ")");
    }
}

HermitianOperator HermitianOperator::identity(int dimension) {
    return HermitianOperator(Eigen::MatrixXcd::Identity(dimension, dimension));
}

bool HermitianOperator::is_real() const {
    return (matrix_.imag().array() == 0.0).all();
}

EigenSystem eigensystem(const HermitianOperator &h, int k) {
    if (k < 1 || k > h.dimension()) {
        throw ParameterError("level count must lie in [1, dimension]");
    }
    if (h.is_real()) {
        auto real = real_eigensystem(h.matrix().real(), k);
        return {real.energies, real.states.cast<std::complex<double>>()};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericError(
            "complex eigensolver did not converge (dimension " + std::to_string(h.dimension()) + ")");
    }
    EigenSystem out{solver.eigenvalues().head(k), solver.eigenvectors().leftCols(k)};
    fix_gauge(out.states);
    return out;
}

HermitianOperator build_single_hamiltonian(const QubitParams &params, double flux, int n_basis, JosephsonSign sign) {
    return HermitianOperator(real_hamiltonian(params, flux, n_basis, sign).cast<std::complex<double>>());
}

double QubitLevels::phase_element(int i, int j) const {
    double value = reduced_phase(i, j);
    if (i == j) {
        value += units::flux_phase(flux);
    }
    return value;
}

QubitLevels solve_qubit(const QubitParams &params, double flux, int levels, int n_basis) {
    if (levels < 1 || levels > n_basis) {
        throw ParameterError("level count must lie in [1, n_basis]");
    }
    auto eig = real_eigensystem(real_hamiltonian(params, flux, n_basis, JosephsonSign::kNegative), levels);
    QubitLevels out;
    out.flux = flux;
    out.energies = eig.energies;
    out.reduced_phase = eig.states.transpose() * reduced_phase_operator(params, n_basis) * eig.states;
    out.reduced_phase = 0.5 * (out.reduced_phase + out.reduced_phase.transpose()).eval();
    return out;
}

double transition_frequency(const QubitParams &params, double flux, int n_basis) {
    auto eig = real_eigensystem(real_hamiltonian(params, flux, n_basis, JosephsonSign::kNegative), 2);
    return eig.energies[1] - eig.energies[0];
}

double flux_dispersion(const QubitParams &params, double flux, int n_basis) {
    // f01 is even about every integer and half-integer flux.
    if (std::remainder(2.0 * flux, 1.0) == 0.0) {
        params.validate();
        return 0.0;
    }
    double up = transition_frequency(params, flux + kDispersionStep, n_basis);
    double down = transition_frequency(params, flux - kDispersionStep, n_basis);
    return (up - down) / (2.0 * kDispersionStep);
}

std::complex<double> phase_matrix_element(const QubitParams &params, double flux, int i, int j, int n_basis) {
    if (i < 0 || j < 0) {
        throw ParameterError("level indices must be non-negative");
    }
    auto h = build_single_hamiltonian(params, flux, n_basis);
    auto eig = eigensystem(h, std::max(i, j) + 1);
    Eigen::MatrixXcd phi = reduced_phase_operator(params, n_basis).cast<std::complex<double>>();
    std::complex<double> value = eig.states.col(i).dot(phi * eig.states.col(j));
    if (i == j) {
        value += units::flux_phase(flux);
    }
    return value;
}

double TwoLevelParams::frequency(double flux) const {
    return std::hypot(epsilon(flux), delta_ghz);
}

double TwoLevelParams::dispersion(double flux) const {
    double eps = epsilon(flux);
    return i_p_ghz_per_phi0 * eps / std::hypot(eps, delta_ghz);
}

TwoLevelParams fit_two_level_samples(const Eigen::VectorXd &flux, const Eigen::VectorXd &f01) {
    if (flux.size() != f01.size() || flux.size() < 3) {
        throw ParameterError("two-level fit needs at least 3 matching samples");
    }
    Eigen::Index n = flux.size();
    Eigen::Index centre = 0;
    (flux.array() - 0.5).abs().minCoeff(&centre);
    Eigen::Index edge = 0;
    (flux.array() - 0.5).abs().maxCoeff(&edge);
    double delta0 = f01[centre];
    double lever = std::abs(flux[edge] - 0.5);
    double eps0 = std::sqrt(std::max(f01[edge] * f01[edge] - delta0 * delta0, 1e-6));
    Eigen::VectorXd x0(2);
    x0 << delta0, eps0 / std::max(lever, 1e-6);

    auto residual = [&](const Eigen::VectorXd &p, Eigen::VectorXd &r) {
        TwoLevelParams tlp{p[0], p[1]};
        for (Eigen::Index i = 0; i < n; ++i) {
            r[i] = tlp.frequency(flux[i]) - f01[i];
        }
    };
    auto fit = detail::minimize(residual, x0, static_cast<int>(n));
    if (!fit.converged) {
        throw NumericError("two-level fit did not converge");
    }
    return {std::abs(fit.params[0]), std::abs(fit.params[1])};
}

TwoLevelParams fit_two_level(const QubitParams &params, FluxWindow window, int n_basis) {
    double centre = 0.5 * (window.lo + window.hi);
    double half = window.half_width();
    if (std::abs(centre - 0.5) > 1e-9 || half < 0.02 - 1e-12 || half > 0.08 + 1e-12) {
        throw ParameterError("fit window must be centred on 0.5 with half-width in [0.02, 0.08]");
    }
    constexpr int kSamples = 41;
    Eigen::VectorXd flux = Eigen::VectorXd::LinSpaced(kSamples, window.lo, window.hi);
    Eigen::VectorXd f01(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        f01[i] = transition_frequency(params, flux[i], n_basis);
    }
    auto tlp = fit_two_level_samples(flux, f01);

    double rms = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        double d = tlp.frequency(flux[i]) - f01[i];
        rms += d * d;
    }
    rms = std::sqrt(rms / kSamples);
    if (rms > 0.01 * tlp.delta_ghz) {
        throw NumericError("two-level fit residual exceeds 1% of delta");
    }
    return tlp;
}

double mixing_angle(const TwoLevelParams &tlp, double flux) {
    return std::atan2(tlp.delta_ghz, tlp.epsilon(flux));
}

}  // namespace fluxlab
