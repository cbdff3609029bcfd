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

#ifndef FLUXLAB_NOISE_DEPHASING_H
#define FLUXLAB_NOISE_DEPHASING_H

#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace fluxlab {

// This module works in SI: seconds, Hz, rad/s. Dispersion slopes alpha are
// d omega / d Phi in rad/s per Phi0.

/// Double-sided flux-noise PSD S(f) = A^2/(2|f|) + S0 for f_low <= |f| <= f_high,
/// zero outside. A in Phi0/sqrt(Hz), S0 in Phi0^2/Hz.
struct NoiseSpectrum {
    double one_over_f_amp = 10.6e-6;
    double white_floor = 0.0;
    double f_low_hz = 1.0;
    double f_high_hz = 1e9;

    void validate() const;
};

double psd(const NoiseSpectrum &spec, double f_hz);

/// Integral of S over f_lo <= f <= f_hi (positive branch, clipped to the
/// cutoffs), in closed form.
double band_power(const NoiseSpectrum &spec, double f_lo, double f_hi);

struct DephasingResult {
    double t_s = 0.0;
    /// <dphi^2>, the quantity summed in the decoherence budget.
    double phase_variance = 0.0;
    /// <dphi^2>/2, so that the decay envelope is exp(-exponent).
    double exponent = 0.0;
    double decay = 1.0;
    /// Standard error of `exponent` (Monte Carlo only).
    double standard_error = 0.0;
};

DephasingResult make_dephasing_result(double t_s, double phase_variance);

enum class FilterKind { kStatic, kNetZero, kSinusoidal };

/// Default slope phase: alpha(t) = alpha cos(w_m t), whose filter cross
/// term is +2 s+ s- cos(w_m t).
inline constexpr double kCosineSlopePhase = std::numbers::pi / 2.0;

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// Noise filter g(omega, t) normalized so that
/// <dphi^2> = (t^2 alpha^2 / 2pi) * integral S(omega) g(omega) d omega over both branches.
///   static      sinc^2(w t/2)
///   net_zero    sin^2(w t/4) sinc^2(w t/4)
///   sinusoidal  1/4 [s+^2 + s-^2 - 2 s+ s- cos(w_m t + 2 psi)], s+- = sinc((w +- w_m) t/2),
///               for a slope alpha sin(w_m t + psi)
double filter_function(
    FilterKind kind, double omega, double t_s, double omega_m = 0.0, double psi = kCosineSlopePhase);

/// Exponent for a constant slope, integrating the static filter expression
/// in log-frequency.
DephasingResult static_dephasing_exponent(double alpha, double t_s, const NoiseSpectrum &spec);

/// Exponent for the first-harmonic slope alpha sin(w_m t + psi), integrating
/// the three-sinc expression in log-frequency. The default psi is the cosine
/// slope.
DephasingResult sinusoidal_dephasing_exponent(
    double alpha, double omega_m, double t_s, const NoiseSpectrum &spec, double psi = kCosineSlopePhase);

/// Exponent for a slope that flips sign halfway (echo-type filter).
DephasingResult net_zero_dephasing_exponent(double alpha, double t_s, const NoiseSpectrum &spec);

/// Generic path: integrates filter_function(kind, ...) in linear omega on
/// panels aligned to the filter oscillations.
DephasingResult filter_dephasing_exponent(
    FilterKind kind,
    double alpha,
    double t_s,
    const NoiseSpectrum &spec,
    double omega_m = 0.0,
    double psi = kCosineSlopePhase);

/// One realization of Phi_n(t) = sum_i Phi_i sin(omega_i t + xi_i) on
/// equally spaced bins of width df starting at f_low. Phi_i^2 is
/// (2/pi) times the integral of S over the bin in omega.
class NoiseTrace {
  public:
    NoiseTrace(std::vector<double> omegas, std::vector<double> amplitudes, std::vector<double> phases);

    double operator()(double t_s) const;
    const std::vector<double> &omegas() const {
        return omegas_;
    }
    const std::vector<double> &amplitudes() const {
        return amplitudes_;
    }
    const std::vector<double> &phases() const {
        return phases_;
    }
    /// sum Phi_i^2 / 2, the ensemble variance of Phi_n(t).
    double variance() const;

  private:
    std::vector<double> omegas_;
    std::vector<double> amplitudes_;
    std::vector<double> phases_;
};

/// Bin centres (rad/s) and amplitudes for the given spacing. Throws
/// ParameterError when df > 1/(10 duration).
struct NoiseBins {
    std::vector<double> omegas;
    std::vector<double> amplitudes;
};

NoiseBins noise_bins(const NoiseSpectrum &spec, double df_hz, double duration_s);

/// Deterministic in (spec, df, duration, seed).
NoiseTrace generate_noise_trace(const NoiseSpectrum &spec, double df_hz, double duration_s, std::uint64_t seed);

/// Ensemble estimate of the exponent for an arbitrary slope waveform
/// alpha(t) on [0, t]. Each realization draws its phases from its own
/// generator seeded with (seed, index), so results do not depend on
/// evaluation order. df = 0 selects 1/(50 t).
struct MonteCarloOptions {
    int n_ensembles = 10000;
    std::uint64_t seed = 1;
    double df_hz = 0.0;
};

DephasingResult mc_dephasing(
    const std::function<double(double)> &alpha_waveform,
    double t_s,
    const NoiseSpectrum &spec,
    const MonteCarloOptions &options = {});

/// First 1/e crossing of a decay curve by linear interpolation; nullopt
/// when the curve never drops below 1/e.
std::optional<double> t2_from_decay(const std::vector<double> &times, const std::vector<double> &decay);

/// P(t) = amplitude * exp(beta (exp(-t/t_beta) - 1)) * exp(-t/t1_tilde).
struct DecayFit {
    double amplitude = 1.0;
    double beta = 0.0;
    double t_beta = 0.0;
    double t1_tilde = 0.0;
    double residual_rms = 0.0;

    double operator()(double t) const;
};

/// Levenberg-Marquardt fit with beta0 = 1, t_beta0 = first 1/e time and
/// t1_tilde0 from the log-slope over the last decade, plus a few restarts.
/// Needs >= 8 samples spanning at least a factor 10 in value.
DecayFit fit_double_exponential(const std::vector<double> &times, const std::vector<double> &values);

}  // namespace fluxlab

#endif  // FLUXLAB_NOISE_DEPHASING_H
