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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fluxlab/errors.h"
#include "fluxlab/quadrature.h"
#include "fluxlab/units.h"

namespace fluxlab {

CalibrationError::CalibrationError(const std::string &what, double phi_min, double phi_max)
    : std::runtime_error(what), phi_min(phi_min), phi_max(phi_max) {
}

std::string pulse_kind_name(PulseKind kind) {
    switch (kind) {
        case PulseKind::kConstant:
            return "constant";
        case PulseKind::kSquareTanh:
            return "square_tanh";
        case PulseKind::kNetZero:
            return "net_zero";
        case PulseKind::kSinusoidal:
            return "sinusoidal";
    }
    return "unknown";
}

PulseKind parse_pulse_kind(const std::string &name) {
    for (auto kind : {PulseKind::kConstant, PulseKind::kSquareTanh, PulseKind::kNetZero, PulseKind::kSinusoidal}) {
        if (pulse_kind_name(kind) == name) {
            return kind;
        }
    }
    throw ParameterError("unknown pulse kind '" + name + "'");
}

void FluxPulse::validate() const {
    if (!(duration_ns > 0.0) || !std::isfinite(duration_ns)) {
        throw ParameterError("pulse duration must be positive and finite");
    }
    if (!std::isfinite(base) || !std::isfinite(amplitude) || !std::isfinite(phase)) {
        throw ParameterError("pulse base, amplitude and phase must be finite");
    }
    if (kind == PulseKind::kSquareTanh && !(rise_time_ns > 0.0)) {
        throw ParameterError("square_tanh rise time must be positive");
    }
    if (kind == PulseKind::kSinusoidal && !(mod_freq_ghz > 0.0 && std::isfinite(mod_freq_ghz))) {
        throw ParameterError("sinusoidal modulation frequency must be positive");
    }
}

std::vector<double> FluxPulse::breakpoints() const {
    if (kind == PulseKind::kNetZero) {
        return {0.5 * duration_ns};
    }
    return {};
}

FluxPulse FluxPulse::constant(double amplitude, double duration_ns, double base) {
    FluxPulse p;
    p.kind = PulseKind::kConstant;
    p.amplitude = amplitude;
    p.duration_ns = duration_ns;
    p.base = base;
    return p;
}

FluxPulse FluxPulse::square_tanh(double amplitude, double duration_ns, double rise_time_ns, double base) {
    FluxPulse p = constant(amplitude, duration_ns, base);
    p.kind = PulseKind::kSquareTanh;
    p.rise_time_ns = rise_time_ns;
    return p;
}

FluxPulse FluxPulse::net_zero(double amplitude, double duration_ns, double base) {
    FluxPulse p = constant(amplitude, duration_ns, base);
    p.kind = PulseKind::kNetZero;
    return p;
}

FluxPulse FluxPulse::sinusoidal(double amplitude, double duration_ns, double mod_freq_ghz, double phase, double base) {
    FluxPulse p = constant(amplitude, duration_ns, base);
    p.kind = PulseKind::kSinusoidal;
    p.mod_freq_ghz = mod_freq_ghz;
    p.phase = phase;
    return p;
}

namespace {

// `first_half` picks the side of the net-zero jump; other shapes are continuous.
double pulse_value(const FluxPulse &p, double t, bool first_half) {
    switch (p.kind) {
        case PulseKind::kConstant:
            return p.base - p.amplitude;
        case PulseKind::kSquareTanh:
            return p.base -
                   p.amplitude * std::tanh(t / p.rise_time_ns) * std::tanh((p.duration_ns - t) / p.rise_time_ns);
        case PulseKind::kNetZero:
            return first_half ? p.base - p.amplitude : p.base + p.amplitude;
        case PulseKind::kSinusoidal:
            return p.base - p.amplitude * std::sin(units::angular(p.mod_freq_ghz) * t + p.phase);
    }
    return p.base;
}

struct Segment {
    double lo;
    double hi;
};

std::vector<Segment> segments(const GateSchedule &sched) {
    std::vector<double> cuts = sched.pulse_a.breakpoints();
    auto b = sched.pulse_b.breakpoints();
    cuts.insert(cuts.end(), b.begin(), b.end());
    std::sort(cuts.begin(), cuts.end());
    std::vector<Segment> out;
    double lo = 0.0;
    for (double c : cuts) {
        if (c > lo && c < sched.t_cz_ns) {
            out.push_back({lo, c});
            lo = c;
        }
    }
    out.push_back({lo, sched.t_cz_ns});
    return out;
}

double max_periods(const GateSchedule &sched) {
    double periods = 0.0;
    for (const auto *p : {&sched.pulse_a, &sched.pulse_b}) {
        if (p->kind == PulseKind::kSinusoidal) {
            periods = std::max(periods, p->mod_freq_ghz * sched.t_cz_ns);
        }
    }
    return periods;
}

int base_panels(const GateSchedule &sched) {
    // Each Simpson panel holds two intervals.
    int panels = std::max(8, static_cast<int>(std::ceil(0.5 * kPointsPerPeriod * max_periods(sched))));
    for (const auto *p : {&sched.pulse_a, &sched.pulse_b}) {
        if (p->kind == PulseKind::kSquareTanh) {
            panels = std::max(panels, static_cast<int>(std::ceil(sched.t_cz_ns / p->rise_time_ns)));
        }
    }
    return panels;
}

// Integrates g(flux_a, flux_b) along the pulses segment by segment.
template <typename G>
QuadratureResult integrate_pulses(const GateSchedule &sched, G &&g, double abs_tol) {
    QuadratureResult total;
    int panels = base_panels(sched);
    for (auto seg : segments(sched)) {
        bool first_half_a = 0.5 * (seg.lo + seg.hi) < 0.5 * sched.pulse_a.duration_ns;
        bool first_half_b = 0.5 * (seg.lo + seg.hi) < 0.5 * sched.pulse_b.duration_ns;
        auto f = [&](double t) {
            return g(pulse_value(sched.pulse_a, t, first_half_a), pulse_value(sched.pulse_b, t, first_half_b));
        };
        double share = (seg.hi - seg.lo) / sched.t_cz_ns;
        int seg_panels = std::max(1, static_cast<int>(std::ceil(panels * share)));
        auto r = adaptive_simpson(f, seg.lo, seg.hi, abs_tol * share, seg_panels);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
    }
    return total;
}

}  // namespace

double sample_pulse(const FluxPulse &pulse, double t_ns) {
    pulse.validate();
    if (!(t_ns >= 0.0 && t_ns <= pulse.duration_ns)) {
        throw ParameterError("sample time outside [0, duration]");
    }
    return pulse_value(pulse, t_ns, t_ns < 0.5 * pulse.duration_ns);
}

void GateSchedule::validate() const {
    pulse_a.validate();
    pulse_b.validate();
    if (!(t_cz_ns > 0.0)) {
        throw ParameterError("t_cz must be positive");
    }
    if (!(t_idle_ns >= 0.0) || !std::isfinite(t_idle_ns)) {
        throw ParameterError("t_idle must be non-negative");
    }
    for (const auto *p : {&pulse_a, &pulse_b}) {
        if (std::abs(p->duration_ns - t_cz_ns) > 1e-12 * t_cz_ns) {
            throw ParameterError("pulse durations must equal t_cz");
        }
    }
}

std::vector<std::string> GateSchedule::warnings() const {
    std::vector<std::string> out;
    for (const auto *p : {&pulse_a, &pulse_b}) {
        if (p->kind != PulseKind::kSinusoidal) {
            continue;
        }
        double periods = p->mod_freq_ghz * t_cz_ns;
        if (std::abs(periods - std::round(periods)) > 1e-6) {
            std::ostringstream msg;
            msg << "t_cz spans " << periods << " modulation periods; the phase is only periodic over whole periods";
            out.push_back(msg.str());
        }
    }
    return out;
}

ConditionalPhase conditional_phase(ZZModel &model, const GateSchedule &sched, double abs_tol) {
    sched.validate();
    auto r = integrate_pulses(
        sched, [&](double fa, double fb) { return units::angular(model.zeta(fa, fb)); }, abs_tol);
    ConditionalPhase out;
    out.pulse = r.value;
    out.idle = units::angular(model.zeta_idle()) * sched.t_idle_ns;
    out.evaluations = r.evaluations;
    return out;
}

ConditionalPhase conditional_phase(const CoupledSystem &sys, const GateSchedule &sched, CouplingModel model) {
    ZZModel zz(sys, model);
    return conditional_phase(zz, sched);
}

double conditional_phase_fixed_step(ZZModel &model, const GateSchedule &sched, int intervals) {
    sched.validate();
    double total = 0.0;
    for (auto seg : segments(sched)) {
        bool first_half_a = 0.5 * (seg.lo + seg.hi) < 0.5 * sched.pulse_a.duration_ns;
        bool first_half_b = 0.5 * (seg.lo + seg.hi) < 0.5 * sched.pulse_b.duration_ns;
        auto f = [&](double t) {
            return units::angular(
                model.zeta(pulse_value(sched.pulse_a, t, first_half_a), pulse_value(sched.pulse_b, t, first_half_b)));
        };
        int n = std::max(2, static_cast<int>(std::ceil(intervals * (seg.hi - seg.lo) / sched.t_cz_ns)));
        total += fixed_simpson(f, seg.lo, seg.hi, n);
    }
    return total + units::angular(model.zeta_idle()) * sched.t_idle_ns;
}

SingleQubitPhases single_qubit_phases(ZZModel &model, const GateSchedule &sched, double abs_tol) {
    sched.validate();
    double idle_a = model.freq_a_idle();
    double idle_b = model.freq_b_idle();
    auto za = integrate_pulses(
        sched, [&](double fa, double fb) { return units::angular(model.freq_a(fa, fb) - idle_a); }, abs_tol);
    auto zb = integrate_pulses(
        sched, [&](double fa, double fb) { return units::angular(model.freq_b(fa, fb) - idle_b); }, abs_tol);
    return {za.value, zb.value};
}

SingleQubitPhases single_qubit_phases(const CoupledSystem &sys, const GateSchedule &sched, CouplingModel model) {
    ZZModel zz(sys, model);
    return single_qubit_phases(zz, sched);
}

FluxPulse make_pulse(const PulseShape &shape, double amplitude) {
    switch (shape.kind) {
        case PulseKind::kConstant:
            return FluxPulse::constant(amplitude, shape.duration_ns);
        case PulseKind::kSquareTanh:
            return FluxPulse::square_tanh(amplitude, shape.duration_ns, shape.rise_time_ns);
        case PulseKind::kNetZero:
            return FluxPulse::net_zero(amplitude, shape.duration_ns);
        case PulseKind::kSinusoidal: {
            double f = shape.mod_freq_ghz > 0.0 ? shape.mod_freq_ghz : 1.0 / shape.duration_ns;
            return FluxPulse::sinusoidal(amplitude, shape.duration_ns, f);
        }
    }
    throw ParameterError("unknown pulse kind");
}

VPhiMap v_phi_map(
    ZZModel &model, const std::vector<double> &amplitudes_a, const std::vector<double> &amplitudes_b, const PulseShape &shape) {
    for (const auto *grid : {&amplitudes_a, &amplitudes_b}) {
        for (double a : *grid) {
            if (!(std::abs(a) <= kCalibrationMaxAmplitude + 1e-12)) {
                throw ParameterError("v_phi_map amplitudes must lie within +-0.15 Phi0");
            }
        }
    }
    VPhiMap out;
    out.amplitudes_a = amplitudes_a;
    out.amplitudes_b = amplitudes_b;
    auto rows = static_cast<Eigen::Index>(amplitudes_a.size());
    auto cols = static_cast<Eigen::Index>(amplitudes_b.size());
    out.v_phi = Eigen::MatrixXd::Constant(rows, cols, std::numeric_limits<double>::quiet_NaN());
    out.valid = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(rows, cols, false);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            GateSchedule sched{make_pulse(shape, amplitudes_a[i]), make_pulse(shape, amplitudes_b[j]), shape.duration_ns, 0.0};
            try {
                auto phi = conditional_phase(model, sched);
                out.v_phi(i, j) = units::per_ns_to_per_us(phi.pulse / shape.duration_ns);
                out.valid(i, j) = true;
            } catch (const LabelingError &) {
            }
        }
    }
    return out;
}

namespace {

constexpr double kRootPhaseTolerance = 1e-6;
constexpr double kBracketWidth = 1e-3;
constexpr double kCheckTolerance = 1e-4;
constexpr double kRootQuadratureTolerance = 1e-9;
constexpr int kScanPoints = 15;

}  // namespace

CZResult calibrate_cz(ZZModel &model, double delta_phi_a, double mod_freq_ghz, double t_cz_ns, double t_idle_ns) {
    if (!(std::abs(delta_phi_a) <= kCalibrationMaxAmplitude)) {
        throw ParameterError("delta_phi_a must lie within +-0.15 Phi0");
    }
    auto schedule = [&](double delta_phi_b) {
        return GateSchedule{
            FluxPulse::sinusoidal(delta_phi_a, t_cz_ns, mod_freq_ghz),
            FluxPulse::sinusoidal(delta_phi_b, t_cz_ns, mod_freq_ghz),
            t_cz_ns,
            t_idle_ns};
    };
    schedule(0.0).validate();
    auto phi_at = [&](double delta_phi_b) {
        return conditional_phase(model, schedule(delta_phi_b), kRootQuadratureTolerance).total();
    };

    // Coarse scan for the first crossing of an odd multiple of pi.
    double lo = 0.0;
    double phi_lo = phi_at(lo);
    double phi_min = phi_lo;
    double phi_max = phi_lo;
    double hi = 0.0;
    double phi_hi = 0.0;
    double target = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= kScanPoints && !bracketed; ++i) {
        double x = kCalibrationMaxAmplitude * i / kScanPoints;
        double y = phi_at(x);
        phi_min = std::min(phi_min, y);
        phi_max = std::max(phi_max, y);
        double a = std::min(phi_lo, y);
        double b = std::max(phi_lo, y);
        double k = std::ceil((a - std::numbers::pi) / units::kTwoPi);
        double candidate = std::numbers::pi + units::kTwoPi * k;
        if (candidate <= b && candidate != phi_lo) {
            hi = x;
            phi_hi = y;
            target = candidate;
            bracketed = true;
        } else {
            lo = x;
            phi_lo = y;
        }
    }
    if (!bracketed) {
        std::ostringstream msg;
        msg << "no delta_phi_b in (0, 0.15] gives phi = pi mod 2pi; achieved phi in [" << phi_min << ", " << phi_max
            << "] rad";
        throw CalibrationError(msg.str(), phi_min, phi_max);
    }

    bool increasing = phi_hi > phi_lo;
    auto check_monotone = [&](double y_lo, double y_mid, double y_hi) {
        bool ok = increasing ? (y_lo < y_mid && y_mid < y_hi) : (y_lo > y_mid && y_mid > y_hi);
        if (!ok) {
            throw NumericError("conditional phase is not monotone in delta_phi_b on the bracketing interval");
        }
    };

    while (hi - lo > kBracketWidth) {
        double mid = 0.5 * (lo + hi);
        double y = phi_at(mid);
        check_monotone(phi_lo, y, phi_hi);
        if ((y < target) == increasing) {
            lo = mid;
            phi_lo = y;
        } else {
            hi = mid;
            phi_hi = y;
        }
    }

    // Secant, falling back to bisection whenever a step leaves the bracket.
    double root = 0.5 * (lo + hi);
    double phi_root = phi_at(root);
    for (int iter = 0; iter < 100 && std::abs(phi_root - target) > kRootPhaseTolerance; ++iter) {
        check_monotone(phi_lo, phi_root, phi_hi);
        if ((phi_root < target) == increasing) {
            lo = root;
            phi_lo = phi_root;
        } else {
            hi = root;
            phi_hi = phi_root;
        }
        double next = lo + (target - phi_lo) * (hi - lo) / (phi_hi - phi_lo);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        root = next;
        phi_root = phi_at(root);
    }
    if (std::abs(phi_root - target) > kRootPhaseTolerance) {
        throw NumericError("calibrate_cz secant did not converge");
    }

    auto sched = schedule(root);
    auto phase = conditional_phase(model, sched, kRootQuadratureTolerance);
    CZResult out;
    out.delta_phi_b = root;
    out.phi = phase.total();
    out.phi_pulse = phase.pulse;
    out.phi_idle = phase.idle;
    auto zetas = single_qubit_phases(model, sched);
    out.zeta_a = zetas.zeta_a;
    out.zeta_b = zetas.zeta_b;

    int check_intervals = 10 * std::max(kPointsPerPeriod, static_cast<int>(std::ceil(kPointsPerPeriod * mod_freq_ghz * t_cz_ns)));
    out.phi_check = conditional_phase_fixed_step(model, sched, check_intervals);
    if (std::abs(out.phi_check - target) > kCheckTolerance) {
        std::ostringstream msg;
        msg << "fixed-step re-check gives phi = " << out.phi_check << ", off target by more than 1e-4 rad";
        throw NumericError(msg.str());
    }
    return out;
}

Eigen::Matrix4cd cz_unitary(const CZResult &res) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = std::polar(1.0, res.zeta_a);
    u(2, 2) = std::polar(1.0, res.zeta_b);
    u(3, 3) = std::polar(1.0, res.zeta_a + res.zeta_b + res.phi);
    return u;
}

double wrap_phase(double x) {
    return x - units::kTwoPi * std::ceil((x - std::numbers::pi) / units::kTwoPi);
}

double n_gate_conditional_phase(const CZResult &res, int n) {
    if (n < 1) {
        throw ParameterError("gate count must be at least 1");
    }
    return wrap_phase(n * res.phi);
}

}  // namespace fluxlab
