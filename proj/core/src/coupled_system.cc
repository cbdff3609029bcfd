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

#include "fluxlab/coupled_system.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"

namespace fluxlab {

LabelingError::LabelingError(double flux_a, double flux_b, double max_overlap)
    : NumericError([&] {
          std::ostringstream msg;
          msg << "cannot label dressed states at (" << flux_a << ", " << flux_b << "): best overlap " << max_overlap
              << " < " << kLabelOverlapThreshold << "; the operating point is inside a resonance, avoid this region";
          return msg.str();
      }()),
      flux_a(flux_a),
      flux_b(flux_b),
      max_overlap(max_overlap) {
}

void CoupledSystem::validate() const {
    qubit_a.validate();
    qubit_b.validate();
    if (levels_per_qubit < 2) {
        throw ParameterError("levels_per_qubit must be at least 2");
    }
    if (n_basis < kMinBasisSize || levels_per_qubit > n_basis) {
        throw ParameterError("n_basis must be >= 20 and >= levels_per_qubit");
    }
    if (!std::isfinite(j_bare_ghz)) {
        throw ParameterError("j_bare must be finite");
    }
}

std::vector<std::string> CoupledSystem::warnings() const {
    std::vector<std::string> out;
    double e_l = std::min(qubit_a.e_l_ghz, qubit_b.e_l_ghz);
    if (std::abs(j_bare_ghz) > 0.1 * e_l) {
        out.push_back("j_bare exceeds 10% of min(E_L); the perturbative coupling picture is questionable");
    }
    return out;
}

Eigen::MatrixXd coupled_hamiltonian(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b) {
    int k = sys.levels_per_qubit;
    if (a.energies.size() != k || b.energies.size() != k) {
        throw ParameterError("single-qubit levels do not match levels_per_qubit");
    }
    Eigen::MatrixXd h = sys.j_bare_ghz * Eigen::kroneckerProduct(a.reduced_phase, b.reduced_phase);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            h(i * k + j, i * k + j) += a.energies[i] + b.energies[j];
        }
    }
    return h;
}

HermitianOperator build_coupled_hamiltonian(const CoupledSystem &sys, double flux_a, double flux_b) {
    sys.validate();
    auto a = solve_qubit(sys.qubit_a, flux_a, sys.levels_per_qubit, sys.n_basis);
    auto b = solve_qubit(sys.qubit_b, flux_b, sys.levels_per_qubit, sys.n_basis);
    return HermitianOperator(coupled_hamiltonian(sys, a, b).cast<std::complex<double>>());
}

DressedLevels dressed_levels_unchecked(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(coupled_hamiltonian(sys, a, b));
    if (solver.info() != Eigen::Success) {
        throw NumericError("coupled eigensolver did not converge");
    }
    const auto &w = solver.eigenvalues();
    const auto &v = solver.eigenvectors();
    int k = sys.levels_per_qubit;
    DressedLevels out;
    auto label = [&](int i, int j) {
        Eigen::Index best = 0;
        double overlap = v.row(i * k + j).cwiseAbs2().maxCoeff(&best);
        out.min_overlap = std::min(out.min_overlap, overlap);
        return w[best];
    };
    out.e_gg = label(0, 0);
    out.e_eg = label(1, 0);
    out.e_ge = label(0, 1);
    out.e_ee = label(1, 1);
    out.single_excitation_gap = w[2] - w[1];
    return out;
}

DressedLevels dressed_levels(const CoupledSystem &sys, const QubitLevels &a, const QubitLevels &b) {
    auto out = dressed_levels_unchecked(sys, a, b);
    if (out.min_overlap < kLabelOverlapThreshold) {
        throw LabelingError(a.flux, b.flux, out.min_overlap);
    }
    return out;
}

DressedLevels dressed_levels(const CoupledSystem &sys, double flux_a, double flux_b) {
    sys.validate();
    auto a = solve_qubit(sys.qubit_a, flux_a, sys.levels_per_qubit, sys.n_basis);
    auto b = solve_qubit(sys.qubit_b, flux_b, sys.levels_per_qubit, sys.n_basis);
    return dressed_levels(sys, a, b);
}

CouplingStrengths coupling_strengths_full(const CoupledSystem &sys, double flux_a, double flux_b) {
    sys.validate();
    auto a = solve_qubit(sys.qubit_a, flux_a, 2, sys.n_basis);
    auto b = solve_qubit(sys.qubit_b, flux_b, 2, sys.n_basis);
    // Flipping |e> flips only the off-diagonal element; orient it non-negative.
    double x_a = 2.0 * std::abs(a.phase_element(0, 1));
    double x_b = 2.0 * std::abs(b.phase_element(0, 1));
    double z_a = a.phase_element(1, 1) - a.phase_element(0, 0);
    double z_b = b.phase_element(1, 1) - b.phase_element(0, 0);
    double scale = sys.j_bare_ghz / 4.0;
    return {scale * x_a * x_b, scale * z_a * z_b, scale * x_a * z_b, scale * z_a * x_b};
}

namespace {

// cos and sin of the mixing angle, exact zeros at half flux.
std::pair<double, double> mixing_cos_sin(const TwoLevelParams &tlp, double flux) {
    double eps = tlp.epsilon(flux);
    double norm = std::hypot(eps, tlp.delta_ghz);
    return {eps / norm, tlp.delta_ghz / norm};
}

}  // namespace

CouplingStrengths coupling_strengths_simplified(
    const TwoLevelParams &tlp_a, const TwoLevelParams &tlp_b, double j_eff_ghz, double flux_a, double flux_b) {
    if (!(j_eff_ghz > 0.0)) {
        throw ParameterError("j_eff must be positive");
    }
    auto [c_a, s_a] = mixing_cos_sin(tlp_a, flux_a);
    auto [c_b, s_b] = mixing_cos_sin(tlp_b, flux_b);
    return {j_eff_ghz * s_a * s_b, j_eff_ghz * c_a * c_b, -j_eff_ghz * s_a * c_b, -j_eff_ghz * c_a * s_b};
}

double effective_j(const CoupledSystem &sys, const TwoLevelParams &tlp_a, const TwoLevelParams &tlp_b) {
    using namespace units;
    const double phi0_reduced = kFluxQuantum / kTwoPi;
    auto joules = [](double ghz) { return ghz * kGHz * kPlanck; };
    double l_a = phi0_reduced * phi0_reduced / joules(sys.qubit_a.e_l_ghz);
    double l_b = phi0_reduced * phi0_reduced / joules(sys.qubit_b.e_l_ghz);
    double mutual = joules(sys.j_bare_ghz) * l_a * l_b / (phi0_reduced * phi0_reduced);
    // eps = 2 I_p (Phi - Phi0/2), so the stored slope is 2 I_p Phi0 / h.
    auto current = [&](const TwoLevelParams &t) { return t.i_p_ghz_per_phi0 * kGHz * kPlanck / (2.0 * kFluxQuantum); };
    return mutual * current(tlp_a) * current(tlp_b) / kPlanck / kGHz;
}

ZZShift zz_shift_exact(const CoupledSystem &sys, double flux_a, double flux_b) {
    auto levels = dressed_levels(sys, flux_a, flux_b);
    return {levels.zeta(), levels.min_overlap};
}

std::vector<ConditionalPoint> conditional_spectrum(
    const CoupledSystem &sys, double flux_a, const std::vector<double> &flux_b_grid) {
    sys.validate();
    for (double fb : flux_b_grid) {
        if (!(fb >= 0.3 && fb <= 0.7)) {
            throw ParameterError("conditional_spectrum grid must lie in [0.3, 0.7]");
        }
    }
    auto a = solve_qubit(sys.qubit_a, flux_a, sys.levels_per_qubit, sys.n_basis);
    std::vector<ConditionalPoint> out;
    out.reserve(flux_b_grid.size());
    for (double fb : flux_b_grid) {
        auto b = solve_qubit(sys.qubit_b, fb, sys.levels_per_qubit, sys.n_basis);
        auto d = dressed_levels_unchecked(sys, a, b);
        ConditionalPoint p;
        p.flux_b = fb;
        p.f_a_given_g = d.freq_a_given_b_ground();
        p.f_a_given_e = d.freq_a_given_b_excited();
        p.zeta = d.zeta();
        p.single_excitation_gap = d.single_excitation_gap;
        p.min_overlap = d.min_overlap;
        p.labelled = d.min_overlap >= kLabelOverlapThreshold;
        out.push_back(p);
    }
    return out;
}

std::vector<double> find_resonance(const CoupledSystem &sys, double flux_a) {
    sys.validate();
    double target = transition_frequency(sys.qubit_a, flux_a, sys.n_basis);
    auto mismatch = [&](double fb) { return target - transition_frequency(sys.qubit_b, fb, sys.n_basis); };

    constexpr double kLo = 0.3;
    constexpr double kHi = 0.7;
    constexpr int kScan = 80;
    std::vector<double> roots;
    double x0 = kLo;
    double f0 = mismatch(x0);
    for (int i = 1; i <= kScan; ++i) {
        double x1 = kLo + (kHi - kLo) * i / kScan;
        double f1 = mismatch(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            double lo = x0;
            double hi = x1;
            double f_lo = f0;
            while (hi - lo > 1e-10) {
                double mid = 0.5 * (lo + hi);
                double f_mid = mismatch(mid);
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) {
        roots.push_back(x0);
    }
    return roots;
}

}  // namespace fluxlab
