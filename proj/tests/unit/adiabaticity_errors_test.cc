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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "fluxlab/errors.h"

namespace fluxlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(LandauZener, Anchors) {
    double delta = 0.87;
    // Sweep rate chosen so the exponent is exactly pi * ratio.
    EXPECT_NEAR(lz_probability(delta, eps_dot_for_ratio(delta, 1.0)), std::exp(-kPi), 1e-15);
    EXPECT_NEAR(lz_probability(delta, eps_dot_for_ratio(delta, 10.0)), std::exp(-0.1 * kPi), 1e-15);
    EXPECT_EQ(lz_probability(0.0, 1.0), 1.0);
    EXPECT_THROW(lz_probability(delta, 0.0), ParameterError);
    EXPECT_THROW(lz_probability(delta, -1.0), ParameterError);
}

TEST(LandauZener, MonotoneInRateAndGap) {
    double prev = 0.0;
    for (double r : {0.1, 1.0, 10.0, 100.0}) {
        double p = lz_probability(0.5, r);
        EXPECT_GT(p, prev);
        prev = p;
    }
    EXPECT_GT(lz_probability(0.3, 1.0), lz_probability(0.6, 1.0));
}

TEST(LandauZener, CriticalRateInverts) {
    for (double p : {1e-2, 1e-4, 1e-6}) {
        double rate = critical_sweep_rate(0.87, p);
        EXPECT_NEAR(lz_probability(0.87, rate), p, 1e-12 * p + 1e-18);
    }
    EXPECT_TRUE(std::isinf(critical_sweep_rate(0.87, 1.0)));
    EXPECT_EQ(min_rise_time(0.87, 2.0, 1.0), 0.0);
    EXPECT_THROW(critical_sweep_rate(0.87, 0.0), ParameterError);
    EXPECT_THROW(critical_sweep_rate(0.87, 1.5), ParameterError);
}

TEST(LandauZener, RiseTimeAndModulationIdentities) {
    double delta = 0.87, span = 3.0, p = 1e-4;
    double rate = critical_sweep_rate(delta, p);
    EXPECT_NEAR(min_rise_time(delta, span, p) * rate, span, 1e-12);
    // A sinusoid eps_max sin(2 pi f t) sweeps at most 2 pi f eps_max.
    double f = max_modulation_frequency(delta, span, p);
    EXPECT_NEAR(2.0 * kPi * f * span, rate, 1e-9 * rate);
    AdiabaticBudget budget{p, delta, span};
    EXPECT_NEAR(budget.max_modulation_frequency(), f, 0.0);
    EXPECT_TRUE(budget.allows(0.5 * f));
    EXPECT_FALSE(budget.allows(2.0 * f));
    budget.p_target = 1.0;
    EXPECT_THROW(budget.validate(), ParameterError);
}

TEST(Clifford, CountingConventions) {
    EXPECT_NEAR(clifford_error(0.001, 0.001, 0.0, SqCounting::kPerLayerSum), 0.0165, 1e-15);
    EXPECT_NEAR(clifford_error(0.001, 0.001, 0.0, SqCounting::kSingleRate), 0.00825, 1e-15);
    EXPECT_NEAR(clifford_error(0.0, 0.0, 0.01, SqCounting::kPerLayerSum), 0.015, 1e-15);
    EXPECT_EQ(clifford_error(0.0, 0.0, 0.0, SqCounting::kSingleRate), 0.0);
    // Linear in each rate.
    double base = clifford_error(0.001, 0.002, 0.004, SqCounting::kPerLayerSum);
    double twice = clifford_error(0.002, 0.004, 0.008, SqCounting::kPerLayerSum);
    EXPECT_NEAR(twice, 2.0 * base, 1e-15);
    EXPECT_THROW(clifford_error(-0.1, 0.0, 0.0, SqCounting::kSingleRate), ParameterError);
    EXPECT_THROW(clifford_error(0.0, 0.0, 1.1, SqCounting::kSingleRate), ParameterError);
}

TEST(Clifford, ReportCarriesBothAndNote) {
    auto r = clifford_report(0.00056, 0.00056, 0.0047, 0.0153);
    EXPECT_NEAR(r.per_layer_sum, 0.01629, 1e-5);
    EXPECT_NEAR(r.single_rate, 0.01167, 1e-5);
    EXPECT_EQ(r.reference, 0.0153);
    EXPECT_FALSE(r.note.empty());
}

ErrorBudget infinite_t1() {
    ErrorBudget b;
    for (auto &q : b.qubits) q.t1_idle_ns = kInf;
    return b;
}

TEST(DecoherenceLimit, T1Only) {
    ErrorBudget b;
    b.t_idle_ns = 20.0;
    b.t_cz_ns = 20.0;
    for (auto &q : b.qubits) q.t1_idle_ns = 100e3;
    // Four terms of 2 t/T1, over 6.
    EXPECT_NEAR(decoherence_limit(b), 4.0 * 2.0 * 20.0 / 100e3 / 6.0, 1e-18);
    b.qubits[0].t1_cz_ns = 50e3;
    double expect = (3.0 * 2.0 * 20.0 / 100e3 + 2.0 * 20.0 / 50e3) / 6.0;
    EXPECT_NEAR(decoherence_limit(b), expect, 1e-18);
}

TEST(DecoherenceLimit, DephasingTermsAndZero) {
    auto b = infinite_t1();
    EXPECT_EQ(decoherence_limit(b), 0.0);
    b.qubits[0].oneoverf_cz = 6e-4;
    b.qubits[1].white_idle = 6e-4;
    EXPECT_NEAR(decoherence_limit(b), 2e-4, 1e-18);
    b.qubits[1].t1_idle_ns = 0.0;
    EXPECT_THROW(decoherence_limit(b), ParameterError);
}

TEST(IdleScaling, AnchorAndLinearity) {
    EXPECT_NEAR(idle_scaling(0.0005, 0.00021, 15.0, 40.0), 0.0018933, 1e-7);
    EXPECT_EQ(idle_scaling(0.001, 0.001, 10.0, 0.0), 0.0);
    EXPECT_NEAR(idle_scaling(0.001, 0.0, 10.0, 40.0), 2.0 * idle_scaling(0.001, 0.0, 10.0, 20.0), 1e-18);
    EXPECT_THROW(idle_scaling(0.001, 0.001, 0.0, 10.0), ParameterError);
}

TEST(PhaseInfidelity, ExactAndQuadratic) {
    auto r = phase_uncertainty_infidelity(0.02);
    EXPECT_NEAR(r.quadratic_variant, 2e-5, 1e-18);
    EXPECT_NEAR(r.average_gate_infidelity, 5.9998e-5, 1e-9);
    // Oracle: average fidelity from the trace of a diag(1,1,1,e^{i x}) error.
    for (double x : {1e-4, 0.01, 0.3}) {
        double tr2 = std::norm(std::complex<double>(3.0 + std::cos(x), std::sin(x)));
        double infid = 1.0 - (4.0 + tr2) / 20.0;
        EXPECT_NEAR(phase_uncertainty_infidelity(x).average_gate_infidelity, infid, 1e-15);
        EXPECT_NEAR(phase_uncertainty_infidelity(-x).average_gate_infidelity, infid, 1e-15);
    }
    EXPECT_EQ(phase_uncertainty_infidelity(0.0).average_gate_infidelity, 0.0);
    double small = phase_uncertainty_infidelity(1e-3).average_gate_infidelity;
    EXPECT_NEAR(phase_uncertainty_infidelity(2e-3).average_gate_infidelity / small, 4.0, 1e-5);
    EXPECT_THROW(phase_uncertainty_infidelity(1.5), ParameterError);
}

}  // namespace
}  // namespace fluxlab
