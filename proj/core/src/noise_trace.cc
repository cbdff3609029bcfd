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

#include <cmath>
#include <complex>
#include <random>

#include "fluxlab/errors.h"
#include "fluxlab/noise_dephasing.h"
#include "fluxlab/units.h"

namespace fluxlab {

NoiseTrace::NoiseTrace(std::vector<double> omegas, std::vector<double> amplitudes, std::vector<double> phases)
    : omegas_(std::move(omegas)), amplitudes_(std::move(amplitudes)), phases_(std::move(phases)) {
    if (omegas_.size() != amplitudes_.size() || omegas_.size() != phases_.size()) {
        throw ParameterError("noise trace components must have matching lengths");
    }
}

double NoiseTrace::operator()(double t_s) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        sum += amplitudes_[i] * std::sin(omegas_[i] * t_s + phases_[i]);
    }
    return sum;
}

double NoiseTrace::variance() const {
    double sum = 0.0;
    for (double a : amplitudes_) {
        sum += 0.5 * a * a;
    }
    return sum;
}

NoiseBins noise_bins(const NoiseSpectrum &spec, double df_hz, double duration_s) {
    spec.validate();
    if (!(duration_s > 0.0) || !(df_hz > 0.0)) {
        throw ParameterError("noise trace needs positive duration and bin spacing");
    }
    if (df_hz > 1.0 / (10.0 * duration_s) * (1.0 + 1e-12)) {
        throw ParameterError("bin spacing df must not exceed 1/(10 duration)");
    }
    double span = spec.f_high_hz - spec.f_low_hz;
    auto n = static_cast<std::size_t>(std::ceil(span / df_hz - 1e-9));
    NoiseBins bins;
    bins.omegas.reserve(n);
    bins.amplitudes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = spec.f_low_hz + static_cast<double>(i) * df_hz;
        double hi = std::min(lo + df_hz, spec.f_high_hz);
        // (2/pi) * int S d omega over the bin = 4 * int S df.
        bins.omegas.push_back(units::angular(0.5 * (lo + hi)));
        bins.amplitudes.push_back(std::sqrt(4.0 * band_power(spec, lo, hi)));
    }
    return bins;
}

namespace {

std::mt19937_64 realization_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

std::vector<double> draw_phases(std::size_t n, std::uint64_t seed, std::uint64_t index) {
    auto engine = realization_engine(seed, index);
    std::uniform_real_distribution<double> uniform(0.0, units::kTwoPi);
    std::vector<double> phases(n);
    for (auto &p : phases) {
        p = uniform(engine);
    }
    return phases;
}

// Pairwise summation keeps the reduction order fixed and the error small.
double pairwise_sum(const double *x, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += x[i];
        }
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace

NoiseTrace generate_noise_trace(const NoiseSpectrum &spec, double df_hz, double duration_s, std::uint64_t seed) {
    auto bins = noise_bins(spec, df_hz, duration_s);
    auto phases = draw_phases(bins.omegas.size(), seed, 0);
    return NoiseTrace(std::move(bins.omegas), std::move(bins.amplitudes), std::move(phases));
}

DephasingResult mc_dephasing(
    const std::function<double(double)> &alpha_waveform,
    double t_s,
    const NoiseSpectrum &spec,
    const MonteCarloOptions &options) {
    if (options.n_ensembles < 100) {
        throw ParameterError("mc_dephasing needs at least 100 realizations");
    }
    if (!(t_s > 0.0)) {
        throw ParameterError("dephasing time must be positive");
    }
    double df = options.df_hz > 0.0 ? options.df_hz : 1.0 / (50.0 * t_s);
    auto bins = noise_bins(spec, df, t_s);
    std::size_t n_bins = bins.omegas.size();

    // W_i = int_0^t alpha(t') exp(i w_i t') dt' by composite Simpson, with
    // the phase factor advanced by a fixed rotation per step.
    double w_max = bins.omegas.empty() ? 0.0 : bins.omegas.back();
    int steps = std::max(200, static_cast<int>(std::ceil(32.0 * w_max * t_s / units::kTwoPi)));
    steps += steps % 2;
    double h = t_s / steps;
    std::vector<double> alpha(steps + 1);
    for (int j = 0; j <= steps; ++j) {
        alpha[j] = alpha_waveform(j * h);
        if (!std::isfinite(alpha[j])) {
            throw NumericError("alpha waveform is not finite");
        }
    }
    std::vector<std::complex<double>> weights(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        std::complex<double> rot = std::polar(1.0, bins.omegas[i] * h);
        std::complex<double> phase = 1.0;
        std::complex<double> acc = 0.0;
        for (int j = 0; j <= steps; ++j) {
            // Re-anchor periodically so rounding in the recurrence cannot drift.
            if (j % 256 == 0) {
                phase = std::polar(1.0, bins.omegas[i] * j * h);
            }
            double c = (j == 0 || j == steps) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            acc += c * alpha[j] * phase;
            phase *= rot;
        }
        weights[i] = acc * (h / 3.0) * bins.amplitudes[i];
    }

    auto n = static_cast<std::size_t>(options.n_ensembles);
    std::vector<double> squares(n);
    std::vector<double> terms(n_bins);
    for (std::size_t r = 0; r < n; ++r) {
        auto phases = draw_phases(n_bins, options.seed, r + 1);
        for (std::size_t i = 0; i < n_bins; ++i) {
            // Im(W_i exp(i xi_i)) is the integral of alpha(t) sin(w_i t + xi_i).
            terms[i] = weights[i].imag() * std::cos(phases[i]) + weights[i].real() * std::sin(phases[i]);
        }
        double dphi = pairwise_sum(terms.data(), n_bins);
        squares[r] = dphi * dphi;
    }
    double mean = pairwise_sum(squares.data(), n) / static_cast<double>(n);
    for (auto &s : squares) {
        s = (s - mean) * (s - mean);
    }
    double var_of_squares = pairwise_sum(squares.data(), n) / static_cast<double>(n - 1);
    auto result = make_dephasing_result(t_s, mean);
    result.standard_error = 0.5 * std::sqrt(var_of_squares / static_cast<double>(n));
    return result;
}

}  // namespace fluxlab
