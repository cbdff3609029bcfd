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

#include "fluxlab/noise_dephasing.h"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"

namespace fluxlab {

void NoiseSpectrum::validate() const {
    if (!(one_over_f_amp >= 0.0) || !(white_floor >= 0.0)) {
        throw ParameterError("noise amplitudes must be non-negative");
    }
    if (!(f_low_hz > 0.0) || !(f_high_hz > f_low_hz) || !std::isfinite(f_high_hz)) {
        throw ParameterError("noise cutoffs must satisfy 0 < f_low < f_high");
    }
}

double psd(const NoiseSpectrum &spec, double f_hz) {
    if (f_hz == 0.0 || !std::isfinite(f_hz)) {
        throw ParameterError("psd is undefined at f = 0");
    }
    double f = std::abs(f_hz);
    if (f < spec.f_low_hz || f > spec.f_high_hz) {
        return 0.0;
    }
    return spec.one_over_f_amp * spec.one_over_f_amp / (2.0 * f) + spec.white_floor;
}

double band_power(const NoiseSpectrum &spec, double f_lo, double f_hi) {
    double a = std::max(f_lo, spec.f_low_hz);
    double b = std::min(f_hi, spec.f_high_hz);
    if (!(b > a)) {
        return 0.0;
    }
    return 0.5 * spec.one_over_f_amp * spec.one_over_f_amp * std::log(b / a) + spec.white_floor * (b - a);
}

DephasingResult make_dephasing_result(double t_s, double phase_variance) {
    DephasingResult r;
    r.t_s = t_s;
    r.phase_variance = phase_variance;
    r.exponent = 0.5 * phase_variance;
    r.decay = std::exp(-r.exponent);
    return r;
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double filter_function(FilterKind kind, double omega, double t_s, double omega_m, double psi) {
    switch (kind) {
        case FilterKind::kStatic: {
            double s = sinc(0.5 * omega * t_s);
            return s * s;
        }
        case FilterKind::kNetZero: {
            double x = 0.25 * omega * t_s;
            double s = std::sin(x) * sinc(x);
            return s * s;
        }
        case FilterKind::kSinusoidal: {
            double sp = sinc(0.5 * (omega + omega_m) * t_s);
            double sm = sinc(0.5 * (omega - omega_m) * t_s);
            return 0.25 * (sp * sp + sm * sm - 2.0 * sp * sm * std::cos(omega_m * t_s + 2.0 * psi));
        }
    }
    return 0.0;
}

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using KronrodCoarse = boost::math::quadrature::gauss_kronrod<double, 15>;

void check_inputs(double alpha, double t_s, const NoiseSpectrum &spec) {
    spec.validate();
    if (!(t_s > 0.0) || !std::isfinite(t_s)) {
        throw ParameterError("dephasing time must be positive");
    }
    if (!std::isfinite(alpha)) {
        throw ParameterError("dispersion slope must be finite");
    }
}

double prefactor(double alpha, double t_s) {
    return t_s * t_s * alpha * alpha / units::kTwoPi;
}

// Both-branch integral of S(omega) h(omega) d omega, substituting
// u = ln(omega). Panels grow geometrically until they reach half a filter
// oscillation (pi/t), then stay that wide.
template <typename H>
double integrate_log_frequency(const NoiseSpectrum &spec, double t_s, H &&h) {
    double w_lo = units::angular(spec.f_low_hz);
    double w_hi = units::angular(spec.f_high_hz);
    double max_width = std::numbers::pi / t_s;
    auto integrand = [&](double u) {
        double w = std::exp(u);
        return psd(spec, units::linear(w)) * h(w) * w;
    };
    double total = 0.0;
    double a = w_lo;
    while (a < w_hi) {
        double b = std::min({a * 1.3, a + max_width, w_hi});
        // Avoid a sliver panel at the top.
        if (w_hi - b < 1e-9 * w_hi) {
            b = w_hi;
        }
        total += Kronrod::integrate(integrand, std::log(a), std::log(b), 6, 1e-11);
        a = b;
    }
    return 2.0 * total;
}

}  // namespace

DephasingResult static_dephasing_exponent(double alpha, double t_s, const NoiseSpectrum &spec) {
    check_inputs(alpha, t_s, spec);
    if (alpha == 0.0) {
        return make_dephasing_result(t_s, 0.0);
    }
    double integral = integrate_log_frequency(spec, t_s, [&](double w) {
        double s = sinc(w * t_s / 2.0);
        return s * s;
    });
    return make_dephasing_result(t_s, prefactor(alpha, t_s) * integral);
}

DephasingResult sinusoidal_dephasing_exponent(
    double alpha, double omega_m, double t_s, const NoiseSpectrum &spec, double psi) {
    check_inputs(alpha, t_s, spec);
    if (!(omega_m > 0.0)) {
        throw ParameterError("modulation frequency must be positive");
    }
    if (alpha == 0.0) {
        return make_dephasing_result(t_s, 0.0);
    }
    double cross = std::cos(omega_m * t_s + 2.0 * psi);
    double integral = integrate_log_frequency(spec, t_s, [&](double w) {
        double plus = sinc((w + omega_m) * t_s / 2.0);
        double minus = sinc((w - omega_m) * t_s / 2.0);
        return (plus * plus + minus * minus - 2.0 * plus * minus * cross) / 4.0;
    });
    return make_dephasing_result(t_s, prefactor(alpha, t_s) * integral);
}

DephasingResult net_zero_dephasing_exponent(double alpha, double t_s, const NoiseSpectrum &spec) {
    check_inputs(alpha, t_s, spec);
    if (alpha == 0.0) {
        return make_dephasing_result(t_s, 0.0);
    }
    double integral = integrate_log_frequency(spec, t_s, [&](double w) {
        double half = std::sin(w * t_s / 4.0);
        double q = sinc(w * t_s / 4.0);
        return half * half * q * q;
    });
    return make_dephasing_result(t_s, prefactor(alpha, t_s) * integral);
}

DephasingResult filter_dephasing_exponent(
    FilterKind kind, double alpha, double t_s, const NoiseSpectrum &spec, double omega_m, double psi) {
    check_inputs(alpha, t_s, spec);
    if (kind == FilterKind::kSinusoidal && !(omega_m > 0.0)) {
        throw ParameterError("modulation frequency must be positive");
    }
    if (alpha == 0.0) {
        return make_dephasing_result(t_s, 0.0);
    }
    double w_lo = units::angular(spec.f_low_hz);
    double w_hi = units::angular(spec.f_high_hz);
    // Panel edges: geometric below one oscillation, then the multiples of
    // pi/(2t) where the filter's sinc factors have their nodes and crests.
    double step = std::numbers::pi / (2.0 * t_s);
    std::vector<double> edges{w_lo};
    while (edges.back() * 1.5 < std::min(step, w_hi)) {
        edges.push_back(edges.back() * 1.5);
    }
    double k = std::floor(edges.back() / step) + 1.0;
    while (k * step < w_hi) {
        edges.push_back(k * step);
        k += 1.0;
    }
    edges.push_back(w_hi);

    auto integrand = [&](double w) {
        return psd(spec, units::linear(w)) * filter_function(kind, w, t_s, omega_m, psi);
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] > edges[i]) {
            total += KronrodCoarse::integrate(integrand, edges[i], edges[i + 1], 8, 1e-11);
        }
    }
    return make_dephasing_result(t_s, prefactor(alpha, t_s) * 2.0 * total);
}

}  // namespace fluxlab
