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

#ifndef FLUXLAB_PULSE_SCHEDULE_H
#define FLUXLAB_PULSE_SCHEDULE_H

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fluxlab/coupled_system.h"

namespace fluxlab {

enum class PulseKind { kConstant, kSquareTanh, kNetZero, kSinusoidal };

std::string pulse_kind_name(PulseKind kind);
/// Accepts "constant", "square_tanh", "net_zero", "sinusoidal".
PulseKind parse_pulse_kind(const std::string &name);

/// Flux waveform on one qubit, measured downward from `base`:
///   constant     base - A
///   square_tanh  base - A tanh(t/t_r) tanh((tau - t)/t_r)
///   net_zero     base - A on [0, tau/2), base + A on [tau/2, tau]
///   sinusoidal   base - A sin(w_m t + phase)
/// Fluxes in Phi0, times in ns, mod_freq in GHz (cycles per ns).
struct FluxPulse {
    PulseKind kind = PulseKind::kConstant;
    double base = 0.5;
    double amplitude = 0.0;
    double duration_ns = 0.0;
    double rise_time_ns = 2.0;
    double mod_freq_ghz = 0.0;
    double phase = 0.0;

    void validate() const;
    /// Points where the waveform has a kink or jump.
    std::vector<double> breakpoints() const;

    static FluxPulse constant(double amplitude, double duration_ns, double base = 0.5);
    static FluxPulse square_tanh(double amplitude, double duration_ns, double rise_time_ns = 2.0, double base = 0.5);
    static FluxPulse net_zero(double amplitude, double duration_ns, double base = 0.5);
    static FluxPulse sinusoidal(
        double amplitude, double duration_ns, double mod_freq_ghz, double phase = 0.0, double base = 0.5);
};

/// Flux at time t in [0, duration]; throws ParameterError outside.
double sample_pulse(const FluxPulse &pulse, double t_ns);

/// Both pulses run for t_cz, then both qubits sit at half flux for t_idle.
struct GateSchedule {
    FluxPulse pulse_a;
    FluxPulse pulse_b;
    double t_cz_ns = 0.0;
    double t_idle_ns = 0.0;

    void validate() const;
    /// Notes such as a sinusoidal pulse that is not an integer number of periods.
    std::vector<std::string> warnings() const;
};

/// Conditional phase in radians, unwrapped, split into the part accumulated
/// during the pulses and during the idle tail.
struct ConditionalPhase {
    double pulse = 0.0;
    double idle = 0.0;
    int evaluations = 0;

    double total() const {
        return pulse + idle;
    }
};

inline constexpr double kPhaseTolerance = 1e-5;
inline constexpr int kPointsPerPeriod = 40;

/// phi = integral of 2 pi zeta(Phi_A(t), Phi_B(t)) dt over the pulses
/// (adaptive Simpson, absolute tolerance `abs_tol` rad) plus
/// 2 pi zeta_idle t_idle. Throws LabelingError if the trajectory enters a
/// resonance region (full model).
ConditionalPhase conditional_phase(ZZModel &model, const GateSchedule &sched, double abs_tol = kPhaseTolerance);
ConditionalPhase conditional_phase(const CoupledSystem &sys, const GateSchedule &sched, CouplingModel model);

/// Same integral by composite Simpson with a fixed number of intervals.
double conditional_phase_fixed_step(ZZModel &model, const GateSchedule &sched, int intervals);

/// zeta_i = integral over t_cz of 2 pi (f_i(t) - f_i(idle)) dt.
struct SingleQubitPhases {
    double zeta_a = 0.0;
    double zeta_b = 0.0;
};

SingleQubitPhases single_qubit_phases(ZZModel &model, const GateSchedule &sched, double abs_tol = kPhaseTolerance);
SingleQubitPhases single_qubit_phases(const CoupledSystem &sys, const GateSchedule &sched, CouplingModel model);

/// Shape options shared by every cell of a v_phi map.
struct PulseShape {
    PulseKind kind = PulseKind::kSquareTanh;
    double duration_ns = 200.0;
    double rise_time_ns = 2.0;
    /// Sinusoidal only; 0 selects one period over the duration.
    double mod_freq_ghz = 0.0;
};

FluxPulse make_pulse(const PulseShape &shape, double amplitude);

/// v_phi = (pulse-part phase)/tau in rad/us for every amplitude pair.
/// Cells whose trajectory crosses a resonance are NaN and marked invalid.
struct VPhiMap {
    std::vector<double> amplitudes_a;
    std::vector<double> amplitudes_b;
    Eigen::MatrixXd v_phi;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

VPhiMap v_phi_map(
    ZZModel &model, const std::vector<double> &amplitudes_a, const std::vector<double> &amplitudes_b, const PulseShape &shape);

struct CZResult {
    double phi = 0.0;
    double phi_pulse = 0.0;
    double phi_idle = 0.0;
    double zeta_a = 0.0;
    double zeta_b = 0.0;
    double delta_phi_b = 0.0;
    /// Phase from the independent fixed-step re-integration.
    double phi_check = 0.0;
};

inline constexpr double kCalibrationMaxAmplitude = 0.15;

/// Finds delta_phi_b in (0, 0.15] such that the sinusoidal schedule
/// (both qubits base 0.5, common mod_freq) gives phi = pi mod 2pi, choosing
/// the smallest such amplitude. Throws CalibrationError when no root is
/// bracketed, NumericError when phi is not monotone on the bracket or the
/// fixed-step re-check disagrees by more than 1e-4 rad.
CZResult calibrate_cz(ZZModel &model, double delta_phi_a, double mod_freq_ghz, double t_cz_ns, double t_idle_ns);

/// diag(1, e^{i zeta_A}, e^{i zeta_B}, e^{i(zeta_A + zeta_B + phi)}) in the
/// basis gg, eg, ge, ee (first letter qubit A).
Eigen::Matrix4cd cz_unitary(const CZResult &res);

/// n * phi wrapped into (-pi, pi].
double n_gate_conditional_phase(const CZResult &res, int n);

/// x wrapped into (-pi, pi].
double wrap_phase(double x);

}  // namespace fluxlab

#endif  // FLUXLAB_PULSE_SCHEDULE_H
