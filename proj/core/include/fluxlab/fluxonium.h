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

#ifndef FLUXLAB_FLUXONIUM_H
#define FLUXLAB_FLUXONIUM_H

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace fluxlab {

inline constexpr int kDefaultBasisSize = 80;
inline constexpr int kMinBasisSize = 20;

/// Circuit energies of a single fluxonium, as linear frequencies E/h in GHz.
struct QubitParams {
    double e_c_ghz = 0.0;
    double e_l_ghz = 0.0;
    double e_j_ghz = 0.0;
    std::string label;

    /// Throws ParameterError unless all energies are positive and
    /// e_j > e_l (double well near half flux).
    void validate() const;

    static QubitParams qubit_a();
    static QubitParams qubit_b();
};

/// Sign of the Josephson term. kNegative is the usual -E_J cos(phi), which
/// puts the double-well degeneracy at half flux. kPositive shifts the whole
/// spectrum by half a flux quantum.
enum class JosephsonSign { kNegative, kPositive };

/// Dense Hermitian matrix in a truncated basis.
class HermitianOperator {
  public:
    /// Throws ParameterError if `matrix` is not square or not Hermitian to
    /// 1e-12 relative to its largest entry.
    explicit HermitianOperator(Eigen::MatrixXcd matrix);

    static HermitianOperator identity(int dimension);

    int dimension() const {
        return static_cast<int>(matrix_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    /// True when every imaginary part is exactly zero.
    bool is_real() const;

  private:
    Eigen::MatrixXcd matrix_;
};

/// The k lowest eigenpairs, energies ascending (GHz).
///
/// Each state is rotated so that its largest-magnitude amplitude is real and
/// positive, the lowest index winning ties, which makes matrix elements
/// reproducible across calls.
struct EigenSystem {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd states;
};

EigenSystem eigensystem(const HermitianOperator &h, int k);

/// Single-qubit Hamiltonian 4 E_C n^2 + (E_L/2)(phi - 2 pi Phi)^2 - E_J cos(phi)
/// in the oscillator basis of the (E_C, E_L) LC mode, centred on the
/// minimum of the inductive term. `flux` is in units of Phi0.
HermitianOperator build_single_hamiltonian(
    const QubitParams &params,
    double flux,
    int n_basis = kDefaultBasisSize,
    JosephsonSign sign = JosephsonSign::kNegative);

/// Low-lying spectrum of one qubit at fixed flux together with the
/// projected interaction operator (phi - 2 pi Phi) in the gauge-fixed
/// eigenbasis. The projected operator is real symmetric.
struct QubitLevels {
    double flux = 0.0;
    Eigen::VectorXd energies;
    Eigen::MatrixXd reduced_phase;

    /// <i|phi|j> including the 2 pi Phi offset on the diagonal.
    double phase_element(int i, int j) const;
};

QubitLevels solve_qubit(const QubitParams &params, double flux, int levels, int n_basis = kDefaultBasisSize);

/// E_1 - E_0 in GHz.
double transition_frequency(const QubitParams &params, double flux, int n_basis = kDefaultBasisSize);

inline constexpr double kDispersionStep = 1e-5;

/// d f01 / d Phi in GHz per Phi0, by central difference with step 1e-5 Phi0.
double flux_dispersion(const QubitParams &params, double flux, int n_basis = kDefaultBasisSize);

/// <i|phi|j> in the eigenbasis returned by `eigensystem`.
std::complex<double> phase_matrix_element(
    const QubitParams &params, double flux, int i, int j, int n_basis = kDefaultBasisSize);

/// Effective spin description near half flux: f01 = sqrt((eps/h)^2 + delta^2)
/// with eps/h = i_p * (Phi - 1/2). `i_p` stores 2 I_p Phi0 / h in GHz/Phi0.
struct TwoLevelParams {
    double delta_ghz = 0.0;
    double i_p_ghz_per_phi0 = 0.0;

    double epsilon(double flux) const {
        return i_p_ghz_per_phi0 * (flux - 0.5);
    }
    double frequency(double flux) const;
    /// Analytic d f01 / d Phi of the two-level model.
    double dispersion(double flux) const;
};

struct FluxWindow {
    double lo = 0.45;
    double hi = 0.55;

    double half_width() const {
        return 0.5 * (hi - lo);
    }
};

/// Least-squares fit of the exact f01(Phi) to the two-level form over
/// `window`, which must be centred on 0.5 with half-width in [0.02, 0.08].
TwoLevelParams fit_two_level(const QubitParams &params, FluxWindow window = {}, int n_basis = kDefaultBasisSize);

/// Fit of the two-level form to arbitrary (flux, f01) samples.
TwoLevelParams fit_two_level_samples(const Eigen::VectorXd &flux, const Eigen::VectorXd &f01);

/// theta = atan2(delta, eps/h), in (0, pi); pi/2 at half flux.
double mixing_angle(const TwoLevelParams &tlp, double flux);

}  // namespace fluxlab

#endif  // FLUXLAB_FLUXONIUM_H
