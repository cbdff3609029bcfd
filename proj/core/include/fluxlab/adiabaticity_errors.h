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

#ifndef FLUXLAB_ADIABATICITY_ERRORS_H
#define FLUXLAB_ADIABATICITY_ERRORS_H

#include <array>
#include <optional>
#include <string>

namespace fluxlab {

// Landau-Zener quantities use linear frequencies: delta and eps in GHz
// (E/h), sweep rates in GHz/ns (d(eps/h)/dt).

/// P_e = exp(-pi Delta^2 / (hbar eps_dot)) = exp(-2 pi^2 delta^2 / eps_dot).
double lz_probability(double delta_ghz, double eps_dot_ghz_per_ns);

/// Sweep rate at which hbar eps_dot = ratio * Delta^2.
double eps_dot_for_ratio(double delta_ghz, double ratio);

/// Fastest sweep keeping P_e <= p_target. Infinite for p_target = 1.
double critical_sweep_rate(double delta_ghz, double p_target);

/// eps_span / critical_sweep_rate, in ns.
double min_rise_time(double delta_ghz, double eps_span_ghz, double p_target = 1e-4);

/// Largest f_m = w_m/2pi (GHz) with w_m eps_max <= critical sweep rate.
double max_modulation_frequency(double delta_ghz, double eps_max_ghz, double p_target = 1e-4);

struct AdiabaticBudget {
    double p_target = 1e-4;
    double delta_ghz = 0.0;
    double eps_max_ghz = 0.0;

    void validate() const;
    double max_modulation_frequency() const;
    bool allows(double mod_freq_ghz) const;
};

/// How single-qubit gate errors enter a two-qubit Clifford.
enum class SqCounting {
    /// r_SQ = r_sq_a + r_sq_b (both qubits act in every layer).
    kPerLayerSum,
    /// r_SQ = (r_sq_a + r_sq_b)/2.
    kSingleRate,
};

/// r_C = (33/4) r_SQ + (3/2) r_CZ.
double clifford_error(double r_sq_a, double r_sq_b, double r_cz, SqCounting counting);

struct CliffordReport {
    double per_layer_sum = 0.0;
    double single_rate = 0.0;
    double reference = 0.0;
    std::string note;
};

/// Both countings side by side with a comparison against `reference`.
CliffordReport clifford_report(double r_sq_a, double r_sq_b, double r_cz, double reference);

/// Decoherence inputs for one qubit. Times in ns; dephasing terms are phase
/// variances <dphi^2>. t1_cz defaults to t1_idle.
struct QubitDecoherence {
    double t1_idle_ns = 0.0;
    std::optional<double> t1_cz_ns;
    double white_idle = 0.0;
    double white_cz = 0.0;
    double oneoverf_cz = 0.0;

    double t1_cz() const {
        return t1_cz_ns.value_or(t1_idle_ns);
    }
};

struct ErrorBudget {
    std::array<QubitDecoherence, 2> qubits;
    double t_idle_ns = 20.0;
    double t_cz_ns = 20.0;
    double r_sq_a = 0.0;
    double r_sq_b = 0.0;
    double r_cz = 0.0;
    double delta_phi = 0.0;

    /// Throws ParameterError for negative times/variances or rates outside [0, 1].
    void validate() const;
};

/// (1/6) sum_i {2 t_idle/T1 + white(t_idle) + 2 t_cz/T1 + white(t_cz) + 1/f(t_cz)}.
/// An infinite T1 contributes nothing.
double decoherence_limit(const ErrorBudget &budget);

/// Linear rescaling of per-gate idle errors to a longer idle.
double idle_scaling(double r_idle_a, double r_idle_b, double t_gate_ns, double t_target_ns);

struct PhaseInfidelity {
    /// Average gate infidelity of diag(1, 1, 1, e^{i dphi}) against the ideal
    /// gate: (6 - 6 cos dphi)/20.
    double average_gate_infidelity = 0.0;
    /// dphi^2/20.
    double quadratic_variant = 0.0;
};

PhaseInfidelity phase_uncertainty_infidelity(double delta_phi);

}  // namespace fluxlab

#endif  // FLUXLAB_ADIABATICITY_ERRORS_H
