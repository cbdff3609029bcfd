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

#include "fluxlab/adiabaticity_errors.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"

namespace fluxlab {
namespace {

void check_positive(double x, const char *name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw ParameterError(std::string(name) + " must be positive and finite");
    }
}

void check_probability(double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw ParameterError("target probability must lie in (0, 1]");
    }
}

void check_rate(double r, const char *name) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw ParameterError(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

double lz_probability(double delta_ghz, double eps_dot_ghz_per_ns) {
    check_positive(eps_dot_ghz_per_ns, "eps_dot");
    if (!std::isfinite(delta_ghz)) {
        throw ParameterError("delta must be finite");
    }
    // pi Delta^2/(hbar eps_dot) with Delta = h d, eps_dot = h e: pi h d^2 / (hbar e).
    return std::exp(-std::numbers::pi * units::kTwoPi * delta_ghz * delta_ghz / eps_dot_ghz_per_ns);
}

double eps_dot_for_ratio(double delta_ghz, double ratio) {
    check_positive(ratio, "ratio");
    return ratio * units::kTwoPi * delta_ghz * delta_ghz;
}

double critical_sweep_rate(double delta_ghz, double p_target) {
    check_positive(delta_ghz, "delta");
    check_probability(p_target);
    if (p_target == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::numbers::pi * units::kTwoPi * delta_ghz * delta_ghz / std::log(1.0 / p_target);
}

double min_rise_time(double delta_ghz, double eps_span_ghz, double p_target) {
    check_positive(eps_span_ghz, "eps_span");
    double rate = critical_sweep_rate(delta_ghz, p_target);
    return std::isinf(rate) ? 0.0 : eps_span_ghz / rate;
}

double max_modulation_frequency(double delta_ghz, double eps_max_ghz, double p_target) {
    check_positive(eps_max_ghz, "eps_max");
    return units::linear(critical_sweep_rate(delta_ghz, p_target) / eps_max_ghz);
}

void AdiabaticBudget::validate() const {
    if (!(p_target > 0.0 && p_target < 1.0)) {
        throw ParameterError("p_target must lie in (0, 1)");
    }
    check_positive(delta_ghz, "delta");
    check_positive(eps_max_ghz, "eps_max");
}

double AdiabaticBudget::max_modulation_frequency() const {
    validate();
    return fluxlab::max_modulation_frequency(delta_ghz, eps_max_ghz, p_target);
}

bool AdiabaticBudget::allows(double mod_freq_ghz) const {
    return mod_freq_ghz < max_modulation_frequency();
}

double clifford_error(double r_sq_a, double r_sq_b, double r_cz, SqCounting counting) {
    check_rate(r_sq_a, "r_sq_a");
    check_rate(r_sq_b, "r_sq_b");
    check_rate(r_cz, "r_cz");
    double r_sq = counting == SqCounting::kPerLayerSum ? r_sq_a + r_sq_b : 0.5 * (r_sq_a + r_sq_b);
    return 33.0 / 4.0 * r_sq + 1.5 * r_cz;
}

CliffordReport clifford_report(double r_sq_a, double r_sq_b, double r_cz, double reference) {
    CliffordReport out;
    out.per_layer_sum = clifford_error(r_sq_a, r_sq_b, r_cz, SqCounting::kPerLayerSum);
    out.single_rate = clifford_error(r_sq_a, r_sq_b, r_cz, SqCounting::kSingleRate);
    out.reference = reference;
    std::ostringstream note;
    note << "per-layer sum gives " << 100.0 * out.per_layer_sum << "%, single rate gives " << 100.0 * out.single_rate
         << "%, reference " << 100.0 * reference << "%; neither counting reproduces the reference exactly";
    out.note = note.str();
    return out;
}

void ErrorBudget::validate() const {
    if (!(t_idle_ns >= 0.0) || !(t_cz_ns >= 0.0)) {
        throw ParameterError("gate times must be non-negative");
    }
    for (const auto &q : qubits) {
        if (!(q.t1_idle_ns > 0.0) || !(q.t1_cz() > 0.0)) {
            throw ParameterError("T1 values must be positive (use infinity for no decay)");
        }
        if (!(q.white_idle >= 0.0) || !(q.white_cz >= 0.0) || !(q.oneoverf_cz >= 0.0)) {
            throw ParameterError("dephasing variances must be non-negative");
        }
    }
    check_rate(r_sq_a, "r_sq_a");
    check_rate(r_sq_b, "r_sq_b");
    check_rate(r_cz, "r_cz");
    if (!std::isfinite(delta_phi)) {
        throw ParameterError("delta_phi must be finite");
    }
}

double decoherence_limit(const ErrorBudget &budget) {
    budget.validate();
    double sum = 0.0;
    for (const auto &q : budget.qubits) {
        sum += 2.0 * budget.t_idle_ns / q.t1_idle_ns + q.white_idle;
        sum += 2.0 * budget.t_cz_ns / q.t1_cz() + q.white_cz + q.oneoverf_cz;
    }
    return sum / 6.0;
}

double idle_scaling(double r_idle_a, double r_idle_b, double t_gate_ns, double t_target_ns) {
    check_rate(r_idle_a, "r_idle_a");
    check_rate(r_idle_b, "r_idle_b");
    check_positive(t_gate_ns, "t_gate");
    if (!(t_target_ns >= 0.0)) {
        throw ParameterError("target idle time must be non-negative");
    }
    return (r_idle_a + r_idle_b) * t_target_ns / t_gate_ns;
}

PhaseInfidelity phase_uncertainty_infidelity(double delta_phi) {
    if (!(std::abs(delta_phi) < 1.0)) {
        throw ParameterError("|delta_phi| must be below 1 rad");
    }
    // d = 4: F = (d + |Tr U^dagger V|^2)/(d(d + 1)), |Tr|^2 = |3 + e^{i dphi}|^2.
    // 6 - 6 cos x = 12 sin^2(x/2), written to avoid cancellation.
    double s = std::sin(0.5 * delta_phi);
    return {12.0 * s * s / 20.0, delta_phi * delta_phi / 20.0};
}

}  // namespace fluxlab
