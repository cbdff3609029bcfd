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

#ifndef FLUXLAB_COUPLED_SYSTEM_H
#define FLUXLAB_COUPLED_SYSTEM_H

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fluxlab/fluxonium.h"

namespace fluxlab {

/// Two inductively coupled fluxoniums. The interaction is
/// j_bare * (phi_A - 2 pi Phi_A)(phi_B - 2 pi Phi_B), with j_bare in GHz.
struct CoupledSystem {
    QubitParams qubit_a = QubitParams::qubit_a();
    QubitParams qubit_b = QubitParams::qubit_b();
    double j_bare_ghz = 0.0035;
    int levels_per_qubit = 6;
    int n_basis = kDefaultBasisSize;

    /// Throws ParameterError for K < 2, K > n_basis, or a non-finite coupling.
    void validate() const;
    /// Non-fatal notes, e.g. a coupling above 10% of the smaller E_L.
    std::vector<std::string> warnings() const;
};

/// Coefficients of the computational-subspace interaction
/// g_xx XX + g_zz ZZ + g_xz XZ + g_zx ZX (first factor acts on A), in GHz.
struct CouplingStrengths {
    double g_xx = 0.0;
    double g_zz = 0.0;
    double g_xz = 0.0;
    double g_zx = 0.0;
};

/// Dressed energies of the four computational states (GHz). Letters are
/// ordered A then B, so e_eg has qubit A excited.
struct DressedLevels {
    double e_gg = 0.0;
    double e_eg = 0.0;
    double e_ge = 0.0;
    double e_ee = 0.0;
    /// Smallest squared overlap between a computational bare product state and
    /// the dressed state assigned to it.
    double min_overlap = 1.0;
    /// Gap between the second and third dressed eigenvalues, i.e. the
    /// splitting of the single-excitation pair whether or not it is labelled.
    double single_excitation_gap = 0.0;

    double zeta() const {
        return e_ee - e_eg - e_ge + e_gg;
    }
    double freq_a_given_b_ground() const {
        return e_eg - e_gg;
    }
    double freq_a_given_b_excited() const {
        return e_ee - e_ge;
    }
    double freq_b_given_a_ground() const {
        return e_ge - e_gg;
    }
};

/// ZZ shift (E_ee - E_eg - E_ge + E_gg)/h in GHz.
struct ZZShift {
    double zeta = 0.0;
    double min_overlap = 1.0;
};

inline constexpr double kLabelOverlapThreshold = 0.7;

/// K^2-dimensional product Hamiltonian, A-major ordering (index i*K + j has
/// A in level i and B in level j).
HermitianOperator build_coupled_hamiltonian(const CoupledSystem &sys, double flux_a, double flux_b);

/// Real-valued variant built from already solved single-qubit levels.
Eigen::MatrixXd coupled_hamiltonian(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b);

/// Diagonalizes and labels the computational states by maximum overlap.
/// Throws LabelingError if any overlap falls below 0.7.
DressedLevels dressed_levels(const CoupledSystem &sys, double flux_a, double flux_b);
DressedLevels dressed_levels(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b);

/// Same diagonalization, but never throws on weak overlap; callers inspect
/// min_overlap themselves.
DressedLevels dressed_levels_unchecked(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b);

/// Matrix-element expressions for the four couplings. Each qubit's excited
/// state is oriented so that <g|phi|e> >= 0.
CouplingStrengths coupling_strengths_full(const CoupledSystem &sys, double flux_a, double flux_b);

/// Two-level expressions: g_xx = J sA sB, g_zz = J cA cB, g_xz = -J sA cB,
/// g_zx = -J cA sB, with cos/sin of each mixing angle.
CouplingStrengths coupling_strengths_simplified(
    const TwoLevelParams &tlp_a, const TwoLevelParams &tlp_b, double j_eff_ghz, double flux_a, double flux_b);

/// J/h = M I_p^A I_p^B / h in GHz, with L_i = (Phi0/2pi)^2/E_L^i and
/// M = j_bare L_A L_B / (Phi0/2pi)^2.
double effective_j(const CoupledSystem &sys, const TwoLevelParams &tlp_a, const TwoLevelParams &tlp_b);

ZZShift zz_shift_exact(const CoupledSystem &sys, double flux_a, double flux_b);

/// One point of the conditional spectrum of qubit A versus flux_b.
struct ConditionalPoint {
    double flux_b = 0.0;
    double f_a_given_g = 0.0;
    double f_a_given_e = 0.0;
    double zeta = 0.0;
    double single_excitation_gap = 0.0;
    double min_overlap = 1.0;
    /// False when the labelled states are ambiguous (resonance region); the
    /// frequencies are then meaningless but the gap is still reported.
    bool labelled = true;
};

/// Grid values must lie in [0.3, 0.7].
std::vector<ConditionalPoint> conditional_spectrum(
    const CoupledSystem &sys, double flux_a, const std::vector<double> &flux_b_grid);

/// flux_b values in [0.3, 0.7] where the bare f01 of B equals f01_A(flux_a),
/// ascending. Empty when the curves never cross.
std::vector<double> find_resonance(const CoupledSystem &sys, double flux_a);

/// Which description of the coupling a time-domain calculation uses.
enum class CouplingModel { kFull, kSimplified };

/// Evaluates the ZZ shift and the idle-referenced qubit frequencies along
/// flux trajectories. Caches single-qubit solves by flux, so one instance
/// must not be shared between threads.
class ZZModel {
  public:
    ZZModel(const CoupledSystem &sys, CouplingModel model);

    CouplingModel model() const {
        return model_;
    }
    const CoupledSystem &system() const {
        return sys_;
    }
    const TwoLevelParams &tlp_a() const {
        return tlp_a_;
    }
    const TwoLevelParams &tlp_b() const {
        return tlp_b_;
    }
    double j_eff_ghz() const {
        return j_eff_;
    }

    /// Equals 4 g_zz in GHz.
    double zeta(double flux_a, double flux_b);
    /// Qubit frequencies with the partner in g (full) or the bare two-level
    /// frequencies (simplified), in GHz.
    double freq_a(double flux_a, double flux_b);
    double freq_b(double flux_a, double flux_b);

    double zeta_idle() const {
        return zeta_idle_;
    }
    double freq_a_idle() const {
        return freq_a_idle_;
    }
    double freq_b_idle() const {
        return freq_b_idle_;
    }

  private:
    const QubitLevels &levels(bool qubit_a, double flux);
    DressedLevels dressed(double flux_a, double flux_b);

    CoupledSystem sys_;
    CouplingModel model_;
    TwoLevelParams tlp_a_;
    TwoLevelParams tlp_b_;
    double j_eff_ = 0.0;
    double zeta_idle_ = 0.0;
    double freq_a_idle_ = 0.0;
    double freq_b_idle_ = 0.0;
    std::unordered_map<std::uint64_t, QubitLevels> cache_a_;
    std::unordered_map<std::uint64_t, QubitLevels> cache_b_;
};

}  // namespace fluxlab

#endif  // FLUXLAB_COUPLED_SYSTEM_H
