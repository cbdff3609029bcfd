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

#include "fluxlab/pulse_schedule.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"

namespace fluxlab {
namespace {

constexpr double kPi = std::numbers::pi;

GateSchedule sinusoidal_schedule(double amp_a, double amp_b, double f_ghz, double t_cz, double t_idle) {
    return {FluxPulse::sinusoidal(amp_a, t_cz, f_ghz), FluxPulse::sinusoidal(amp_b, t_cz, f_ghz), t_cz, t_idle};
}

TEST(FluxPulse, Sampling) {
    auto s = FluxPulse::sinusoidal(0.1, 20.0, 0.05);
    EXPECT_EQ(sample_pulse(s, 0.0), 0.5);
    EXPECT_NEAR(sample_pulse(s, 5.0), 0.4, 1e-15);
    EXPECT_NEAR(sample_pulse(s, 20.0), 0.5, 1e-15);
    auto sq = FluxPulse::square_tanh(0.1, 200.0, 2.0);
    EXPECT_NEAR(sample_pulse(sq, 100.0), 0.4, 1e-6);
    EXPECT_EQ(sample_pulse(sq, 0.0), 0.5);
    EXPECT_THROW(sample_pulse(sq, 200.5), ParameterError);
    EXPECT_THROW(sample_pulse(sq, -0.1), ParameterError);
    auto c = FluxPulse::constant(0.03, 10.0);
    EXPECT_DOUBLE_EQ(sample_pulse(c, 3.0), 0.47);
    EXPECT_THROW(FluxPulse::constant(0.1, 0.0).validate(), ParameterError);
}

TEST(FluxPulse, NetZeroIntegratesToZero) {
    auto p = FluxPulse::net_zero(0.08, 30.0);
    // Midpoint sums never sample the jump at t/2.
    double integral = 0.0;
    for (int i = 0; i < 200; ++i) integral += (sample_pulse(p, (i + 0.5) * 0.15) - p.base) * 0.15;
    EXPECT_NEAR(integral, 0.0, 1e-12);
    EXPECT_EQ(p.breakpoints(), std::vector<double>{15.0});
    EXPECT_DOUBLE_EQ(sample_pulse(p, 10.0), 0.42);
    EXPECT_DOUBLE_EQ(sample_pulse(p, 20.0), 0.58);
}

TEST(GateSchedule, ValidationAndWarnings) {
    auto ok = sinusoidal_schedule(0.1, 0.05, 0.05, 20.0, 20.0);
    EXPECT_NO_THROW(ok.validate());
    EXPECT_TRUE(ok.warnings().empty());
    auto odd = sinusoidal_schedule(0.1, 0.05, 0.05, 30.0, 0.0);
    EXPECT_FALSE(odd.warnings().empty());
    auto mismatch = ok;
    mismatch.t_cz_ns = 25.0;
    EXPECT_THROW(mismatch.validate(), ParameterError);
    auto negative = ok;
    negative.t_idle_ns = -1.0;
    EXPECT_THROW(negative.validate(), ParameterError);
}

TEST(ConditionalPhase, IdlePulses) {
    CoupledSystem sys;
    GateSchedule idle{FluxPulse::constant(0.0, 1000.0), FluxPulse::constant(0.0, 1000.0), 1000.0, 0.0};
    EXPECT_EQ(conditional_phase(sys, idle, CouplingModel::kSimplified).total(), 0.0);
    ZZModel full(sys, CouplingModel::kFull);
    auto phi = conditional_phase(full, idle);
    EXPECT_NEAR(phi.pulse, units::angular(full.zeta_idle()) * 1000.0, 1e-9);
    EXPECT_NEAR(std::abs(phi.pulse), 0.438, 0.5 * 0.438);
    auto z = single_qubit_phases(full, idle);
    EXPECT_NEAR(z.zeta_a, 0.0, 1e-12);
    EXPECT_NEAR(z.zeta_b, 0.0, 1e-12);
}

TEST(ConditionalPhase, ConstantPulseIsExactAndAdditive) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    double zeta = model.zeta(0.46, 0.47);
    auto run = [&](double tau, double idle) {
        GateSchedule s{FluxPulse::constant(0.04, tau), FluxPulse::constant(0.03, tau), tau, idle};
        return conditional_phase(model, s);
    };
    auto a = run(7.0, 0.0), b = run(13.0, 0.0), ab = run(20.0, 0.0);
    EXPECT_NEAR(ab.pulse, units::angular(zeta) * 20.0, 1e-9);
    EXPECT_NEAR(ab.pulse, a.pulse + b.pulse, 1e-9);
    auto idle = run(20.0, 35.0);
    EXPECT_NEAR(idle.idle, units::angular(model.zeta_idle()) * 35.0, 1e-12);
    EXPECT_NEAR(idle.total(), ab.pulse + idle.idle, 1e-12);
}

TEST(ConditionalPhase, PeriodicityAndFixedStepOracle) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    auto one = sinusoidal_schedule(0.1, 0.05, 0.05, 20.0, 0.0);
    auto two = sinusoidal_schedule(0.1, 0.05, 0.05, 40.0, 0.0);
    double p1 = conditional_phase(model, one).pulse, p2 = conditional_phase(model, two).pulse;
    EXPECT_NEAR(p2, 2.0 * p1, 2e-5);
    EXPECT_NEAR(conditional_phase_fixed_step(model, one, 4000), p1, 1e-5);
    auto z1 = single_qubit_phases(model, one), z2 = single_qubit_phases(model, two);
    EXPECT_NEAR(z2.zeta_a, 2.0 * z1.zeta_a, 2e-5);
    EXPECT_NEAR(z2.zeta_b, 2.0 * z1.zeta_b, 2e-5);
}

TEST(ConditionalPhase, SignSymmetriesSimplifiedModel) {
    ZZModel model(CoupledSystem{}, CouplingModel::kSimplified);
    auto phi = [&](double a, double b) {
        GateSchedule s{FluxPulse::square_tanh(a, 50.0), FluxPulse::square_tanh(b, 50.0), 50.0, 0.0};
        return conditional_phase(model, s).total();
    };
    double pp = phi(0.06, 0.04);
    EXPECT_NEAR(phi(-0.06, -0.04), pp, 1e-4);
    EXPECT_NEAR(phi(-0.06, 0.04), -pp, 1e-4);
    EXPECT_NEAR(phi(0.06, -0.04), -pp, 1e-4);
}

TEST(ConditionalPhase, SignSymmetriesFullModel) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    double res = model.zeta_idle();
    auto phi = [&](double a, double b) {
        GateSchedule s{FluxPulse::square_tanh(a, 50.0), FluxPulse::square_tanh(b, 50.0), 50.0, 0.0};
        return conditional_phase(model, s).total() - units::angular(res) * 50.0;
    };
    double pp = phi(0.06, 0.04);
    EXPECT_NEAR(phi(-0.06, -0.04), pp, 1e-4);
    // One flip negates the modulated part up to the J^2 remainder (about 1.3% here).
    EXPECT_NEAR(phi(-0.06, 0.04), -pp, 0.02 * std::abs(pp));
}

TEST(ConditionalPhase, ResonanceCrossingThrows) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    GateSchedule s{FluxPulse::constant(0.042, 10.0), FluxPulse::constant(0.061404592507, 10.0), 10.0, 0.0};
    EXPECT_THROW(conditional_phase(model, s), LabelingError);
}

TEST(SingleQubitPhases, SignFollowsFrequencyCurve) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    GateSchedule s{FluxPulse::sinusoidal(0.08, 40.0, 0.05), FluxPulse::constant(0.0, 40.0), 40.0, 0.0};
    auto z = single_qubit_phases(model, s);
    // f01 is smallest at half flux, so any excursion raises the frequency.
    EXPECT_GT(z.zeta_a, 0.0);
    // B only moves through dressing by the coupling.
    EXPECT_NEAR(z.zeta_b, 0.0, 0.01 * z.zeta_a);
}

TEST(VPhiMap, ResidualRowSymmetryAndFastGate) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    std::vector<double> amps = {-0.15, -0.05, 0.0, 0.05, 0.15};
    PulseShape shape;
    auto map = v_phi_map(model, amps, amps, shape);
    double v_res = units::per_ns_to_per_us(units::angular(model.zeta_idle()));
    EXPECT_TRUE(map.valid(2, 2));
    EXPECT_NEAR(map.v_phi(2, 2), v_res, 1e-6);
    EXPECT_NE(map.v_phi(2, 2), 0.0);
    double best = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            EXPECT_EQ(map.valid(i, j), map.valid(4 - i, 4 - j));
            if (!map.valid(i, j)) {
                EXPECT_TRUE(std::isnan(map.v_phi(i, j)));
                continue;
            }
            EXPECT_NEAR(map.v_phi(i, j), map.v_phi(4 - i, 4 - j), 1e-6 * std::max(1.0, std::abs(map.v_phi(i, j))));
            best = std::max(best, map.v_phi(i, j));
        }
    }
    EXPECT_GE(best, kPi / 9.0 * 1e3);
    EXPECT_THROW(v_phi_map(model, {0.2}, {0.0}, shape), ParameterError);
}

TEST(VPhiMap, SinusoidalSlowerThanSquare) {
    ZZModel model(CoupledSystem{}, CouplingModel::kFull);
    PulseShape square, sine;
    square.duration_ns = sine.duration_ns = 100.0;
    sine.kind = PulseKind::kSinusoidal;
    auto sq = v_phi_map(model, {0.03}, {0.03}, square);
    auto sn = v_phi_map(model, {0.03}, {0.03}, sine);
    double ratio = sn.v_phi(0, 0) / sq.v_phi(0, 0);
    EXPECT_GE(ratio, 0.3);
    EXPECT_LE(ratio, 0.7);
}

TEST(Calibration, SymmetricSystemFixedPoint) {
    CoupledSystem sys;
    sys.qubit_b = sys.qubit_a;
    sys.qubit_b.label = "B";
    ZZModel model(sys, CouplingModel::kSimplified);
    // Oracle: bisection along the diagonal delta_a = delta_b for phi = pi.
    auto diag = [&](double x) { return conditional_phase(model, sinusoidal_schedule(x, x, 0.05, 20.0, 20.0), 1e-10).total() - kPi; };
    double lo = 0.01, hi = 0.15;
    ASSERT_LT(diag(lo) * diag(hi), 0.0);
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (diag(lo) * diag(mid) <= 0.0 ? hi : lo) = mid;
    }
    double x = 0.5 * (lo + hi);
    auto res = calibrate_cz(model, x, 0.05, 20.0, 20.0);
    EXPECT_NEAR(res.delta_phi_b, x, 1e-6);
    EXPECT_NEAR(res.phi, kPi, 1e-6);
}

TEST(Calibration, InfeasibleReportsRange) {
    ZZModel model(CoupledSystem{}, CouplingModel::kSimplified);
    try {
        calibrate_cz(model, 0.005, 0.05, 20.0, 20.0);
        FAIL() << "expected CalibrationError";
    } catch (const CalibrationError &e) {
        EXPECT_LT(e.phi_max, kPi);
        EXPECT_LE(e.phi_min, e.phi_max);
    }
}

TEST(CZUnitary, AnchorsAndUnitarity) {
    CZResult ideal;
    ideal.phi = kPi;
    auto u = cz_unitary(ideal);
    Eigen::Vector4cd expect(1, 1, 1, -1);
    EXPECT_LE((u.diagonal() - expect).norm(), 1e-15);
    CZResult za;
    za.zeta_a = kPi;
    EXPECT_LE((cz_unitary(za).diagonal() - Eigen::Vector4cd(1, -1, 1, -1)).norm(), 1e-15);
    CZResult any{2.2, 2.0, 0.2, 0.7, -1.3, 0.05, 2.2};
    auto v = cz_unitary(any);
    EXPECT_LE((v * v.adjoint() - Eigen::Matrix4cd::Identity()).norm(), 1e-12);
    EXPECT_EQ((v - Eigen::Matrix4cd(v.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(CZUnitary, PowersMatchNGatePhases) {
    CZResult res{kPi + 0.01, 0.0, 0.0, 0.3, -0.2, 0.05, kPi + 0.01};
    auto u = cz_unitary(res);
    Eigen::Matrix4cd power = Eigen::Matrix4cd::Identity();
    for (int n = 1; n <= 9; ++n) {
        power = power * u;
        // Conditional phase of U^n: arg(U11 U00 / (U01 U10)).
        auto d = power.diagonal();
        double cond = std::arg(d[3] * d[0] / (d[1] * d[2]));
        EXPECT_NEAR(cond, n_gate_conditional_phase(res, n), 1e-12) << n;
    }
}

TEST(NGatePhase, Wrapping) {
    CZResult res;
    res.phi = kPi;
    EXPECT_NEAR(n_gate_conditional_phase(res, 2), 0.0, 1e-15);
    EXPECT_NEAR(n_gate_conditional_phase(res, 6), 0.0, 1e-14);
    EXPECT_NEAR(n_gate_conditional_phase(res, 3), kPi, 1e-14);
    res.phi = kPi + 0.01;
    EXPECT_NEAR(n_gate_conditional_phase(res, 8), 0.08, 1e-12);
    EXPECT_THROW(n_gate_conditional_phase(res, 0), ParameterError);
    EXPECT_EQ(wrap_phase(kPi), kPi);
    EXPECT_NEAR(wrap_phase(-kPi), kPi, 1e-15);
}

}  // namespace
}  // namespace fluxlab
