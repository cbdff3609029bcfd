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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fluxlab/errors.h"
#include "fluxlab/units.h"
#include "oracles.h"

namespace fluxlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlpha = 5.7e10;  // rad/s per Phi0, close to qubit A at the CZ point

NoiseSpectrum white_only(double s0) {
    NoiseSpectrum spec;
    spec.one_over_f_amp = 0.0;
    spec.white_floor = s0;
    return spec;
}

TEST(Psd, AnchorsAndBand) {
    NoiseSpectrum spec;
    EXPECT_NEAR(psd(spec, 1.0), 5.618e-11, 1e-15);
    EXPECT_NEAR(psd(spec, -1e3), psd(spec, 1e3), 0.0);
    EXPECT_EQ(psd(spec, 0.5), 0.0);
    EXPECT_EQ(psd(spec, 2e9), 0.0);
    EXPECT_THROW(psd(spec, 0.0), ParameterError);
    spec.f_low_hz = 0.0;
    EXPECT_THROW(spec.validate(), ParameterError);
}

TEST(Psd, BandPowerMatchesTrapezoid) {
    NoiseSpectrum spec;
    spec.white_floor = 1e-20;
    double lo = 10.0, hi = 1e5;
    // Integrate in u = ln f so the 1/f part is smooth.
    double ref = oracle::trapezoid(
        [&](double u) {
            double f = std::exp(u);
            return psd(spec, f) * f;
        },
        std::log(lo), std::log(hi), 200000);
    EXPECT_NEAR(band_power(spec, lo, hi), ref, 1e-8 * ref);
    EXPECT_EQ(band_power(spec, 2e9, 3e9), 0.0);
}

TEST(Filter, Anchors) {
    double t = 20e-9, wm = units::angular(50e6);
    EXPECT_EQ(filter_function(FilterKind::kStatic, 0.0, t), 1.0);
    EXPECT_EQ(filter_function(FilterKind::kNetZero, 0.0, t), 0.0);
    EXPECT_NEAR(filter_function(FilterKind::kStatic, 2.0 * kPi / t, t), 0.0, 1e-30);
    // Cosine modulation over whole periods has no static response.
    EXPECT_NEAR(filter_function(FilterKind::kSinusoidal, 0.0, t, wm), 0.0, 1e-15);
    // Sine modulation keeps some.
    EXPECT_GT(filter_function(FilterKind::kSinusoidal, 0.0, 25e-9, wm, 0.0), 0.0);
    for (int i = 0; i <= 2000; ++i) {
        double w = i * 1e6;
        for (auto kind : {FilterKind::kStatic, FilterKind::kNetZero, FilterKind::kSinusoidal}) {
            EXPECT_GE(filter_function(kind, w, t, wm), -1e-15);
        }
    }
}

TEST(Filter, SinusoidalPeaksNearModulation) {
    double t = 400e-9, wm = units::angular(50e6);
    double best_w = 0.0, best = -1.0;
    for (int i = 1; i <= 4000; ++i) {
        double w = wm * i / 2000.0;
        double v = filter_function(FilterKind::kSinusoidal, w, t, wm);
        if (v > best) {
            best = v;
            best_w = w;
        }
    }
    EXPECT_NEAR(best_w / wm, 1.0, 0.02);
    EXPECT_NEAR(best, 0.25, 0.01);
}

TEST(Dephasing, ZeroSlopeGivesNoDephasing) {
    NoiseSpectrum spec;
    EXPECT_EQ(static_dephasing_exponent(0.0, 1e-6, spec).exponent, 0.0);
    EXPECT_EQ(sinusoidal_dephasing_exponent(0.0, 1e8, 1e-6, spec).decay, 1.0);
    EXPECT_EQ(net_zero_dephasing_exponent(0.0, 1e-6, spec).exponent, 0.0);
    EXPECT_THROW(static_dephasing_exponent(1.0, 0.0, spec), ParameterError);
    EXPECT_THROW(sinusoidal_dephasing_exponent(1.0, 0.0, 1e-6, spec), ParameterError);
}

TEST(Dephasing, WhiteFloorClosedForm) {
    double s0 = 1e-22;
    auto spec = white_only(s0);
    for (double t : {1e-6, 2e-6, 4e-6}) {
        auto r = static_dephasing_exponent(kAlpha, t, spec);
        EXPECT_NEAR(r.phase_variance, kAlpha * kAlpha * s0 * t, 1e-3 * kAlpha * kAlpha * s0 * t) << t;
        EXPECT_NEAR(r.exponent, 0.5 * r.phase_variance, 0.0);
        EXPECT_NEAR(r.decay, std::exp(-r.exponent), 1e-15);
    }
}

TEST(Dephasing, LowCutoffLimitIsQuasiStatic) {
    NoiseSpectrum spec;
    spec.f_high_hz = 1e3;
    double t = 1e-6;
    auto r = static_dephasing_exponent(kAlpha, t, spec);
    double expect = 2.0 * t * t * kAlpha * kAlpha * band_power(spec, spec.f_low_hz, spec.f_high_hz);
    EXPECT_NEAR(r.phase_variance, expect, 1e-5 * expect);
}

TEST(Dephasing, StaticMatchesLogTrapezoidOracle) {
    NoiseSpectrum spec;
    double t = 20e-9;
    // variance = t^2 alpha^2 A^2 int sinc^2(pi f t) d(ln f)
    double ref = oracle::trapezoid(
        [&](double u) {
            double x = kPi * std::exp(u) * t;
            double s = std::sin(x) / x;
            return s * s;
        },
        0.0, std::log(spec.f_high_hz), 400000);
    ref *= t * t * kAlpha * kAlpha * spec.one_over_f_amp * spec.one_over_f_amp;
    EXPECT_NEAR(static_dephasing_exponent(kAlpha, t, spec).phase_variance, ref, 1e-6 * ref);
}

TEST(Dephasing, OneOverFGrowsFasterThanLinear) {
    NoiseSpectrum spec;
    double prev = 0.0;
    for (double t : {1e-8, 2e-8, 4e-8, 8e-8}) {
        double e = static_dephasing_exponent(kAlpha, t, spec).exponent;
        if (prev > 0.0) {
            EXPECT_GT(e / prev, 2.0);
        }
        prev = e;
    }
}

TEST(Dephasing, DirectAndFilterRoutesAgree) {
    NoiseSpectrum spec;
    spec.white_floor = 1e-22;
    double wm = units::angular(50e6);
    for (double t : {20e-9, 200e-9, 2e-6}) {
        double a = static_dephasing_exponent(kAlpha, t, spec).exponent;
        double b = filter_dephasing_exponent(FilterKind::kStatic, kAlpha, t, spec).exponent;
        EXPECT_NEAR(a, b, 1e-6 * a) << "static " << t;
        a = sinusoidal_dephasing_exponent(kAlpha, wm, t, spec).exponent;
        b = filter_dephasing_exponent(FilterKind::kSinusoidal, kAlpha, t, spec, wm).exponent;
        EXPECT_NEAR(a, b, 1e-6 * a) << "sinusoidal " << t;
        a = net_zero_dephasing_exponent(kAlpha, t, spec).exponent;
        b = filter_dephasing_exponent(FilterKind::kNetZero, kAlpha, t, spec).exponent;
        EXPECT_NEAR(a, b, 1e-6 * a) << "net zero " << t;
    }
}

TEST(Dephasing, ModulationSuppressesOneOverF) {
    NoiseSpectrum spec;
    double t = 2e-6;
    double st = static_dephasing_exponent(kAlpha, t, spec).exponent;
    double sn = sinusoidal_dephasing_exponent(kAlpha, units::angular(50e6), t, spec).exponent;
    double nz = net_zero_dephasing_exponent(kAlpha, t, spec).exponent;
    EXPECT_LT(sn, 0.1 * st);
    EXPECT_LT(nz, 0.1 * st);
    double slow = sinusoidal_dephasing_exponent(kAlpha, units::angular(0.5e6), t, spec).exponent;
    EXPECT_GT(slow, sn);
}

TEST(NoiseTrace, DeterministicAndVarianceIdentity) {
    NoiseSpectrum spec;
    spec.f_high_hz = 1e8;
    double t = 1e-6, df = 1e5;
    auto a = generate_noise_trace(spec, df, t, 42);
    auto b = generate_noise_trace(spec, df, t, 42);
    auto c = generate_noise_trace(spec, df, t, 43);
    EXPECT_EQ(a.phases(), b.phases());
    EXPECT_NE(a.phases(), c.phases());
    EXPECT_EQ(a(3.3e-7), b(3.3e-7));
    EXPECT_NEAR(a.variance(), 2.0 * band_power(spec, spec.f_low_hz, spec.f_high_hz), 1e-12 * a.variance());
    auto bins = noise_bins(spec, df, t);
    EXPECT_NEAR(bins.amplitudes[3], std::sqrt(4.0 * band_power(spec, spec.f_low_hz + 3 * df, spec.f_low_hz + 4 * df)), 1e-20);
    EXPECT_NEAR(bins.omegas[0], units::angular(spec.f_low_hz + 0.5 * df), 1e-6);
    EXPECT_THROW(noise_bins(spec, 2e5, t), ParameterError);
    EXPECT_THROW(NoiseTrace({1.0}, {1.0, 2.0}, {0.0}), ParameterError);
}

TEST(NoiseTrace, SampleVarianceMatchesSpectrum) {
    NoiseSpectrum spec;
    spec.f_low_hz = 1e3;
    spec.f_high_hz = 1e7;
    auto trace = generate_noise_trace(spec, 1e4, 1e-5, 7);
    double sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double x = trace(i * 5e-8);
        sum += x * x;
    }
    // One realization over 1 ms: the slowest bins dominate the scatter.
    EXPECT_NEAR(sum / n, trace.variance(), 0.3 * trace.variance());
}

TEST(MonteCarlo, MatchesAnalyticWithinThreeSigma) {
    NoiseSpectrum spec;
    double t = 20e-9, wm = units::angular(50e6);
    MonteCarloOptions opt;
    opt.n_ensembles = 4000;
    opt.seed = 1;
    auto mc_static = mc_dephasing([](double) { return kAlpha; }, t, spec, opt);
    auto an_static = static_dephasing_exponent(kAlpha, t, spec);
    EXPECT_NEAR(mc_static.exponent, an_static.exponent, 3.0 * mc_static.standard_error);
    auto mc_sin = mc_dephasing([&](double s) { return kAlpha * std::cos(wm * s); }, t, spec, opt);
    auto an_sin = sinusoidal_dephasing_exponent(kAlpha, wm, t, spec);
    EXPECT_NEAR(mc_sin.exponent, an_sin.exponent, 3.0 * mc_sin.standard_error);
    EXPECT_GT(mc_sin.standard_error, 0.0);
}

TEST(MonteCarlo, DeterministicForSeed) {
    NoiseSpectrum spec;
    MonteCarloOptions opt;
    opt.n_ensembles = 200;
    opt.seed = 9;
    auto a = mc_dephasing([](double) { return kAlpha; }, 20e-9, spec, opt);
    auto b = mc_dephasing([](double) { return kAlpha; }, 20e-9, spec, opt);
    EXPECT_EQ(a.exponent, b.exponent);
    opt.n_ensembles = 50;
    EXPECT_THROW(mc_dephasing([](double) { return kAlpha; }, 20e-9, spec, opt), ParameterError);
}

TEST(T2FromDecay, Crossing) {
    std::vector<double> t, y;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(i * 5.0);
        y.push_back(std::exp(-t.back() / 100.0));
    }
    auto t2 = t2_from_decay(t, y);
    ASSERT_TRUE(t2.has_value());
    EXPECT_NEAR(*t2, 100.0, 0.2);
    std::vector<double> flat(t.size(), 0.9);
    EXPECT_FALSE(t2_from_decay(t, flat).has_value());
    EXPECT_THROW(t2_from_decay({1.0}, {1.0}), ParameterError);
}

std::vector<double> sample_times() {
    std::vector<double> t;
    for (int i = 0; i < 60; ++i) t.push_back(i * 20.0);
    return t;
}

TEST(DecayFit, Roundtrip) {
    DecayFit truth{1.0, 2.0, 50.0, 400.0, 0.0};
    auto t = sample_times();
    std::vector<double> y;
    for (double x : t) y.push_back(truth(x));
    auto fit = fit_double_exponential(t, y);
    EXPECT_NEAR(fit.beta, 2.0, 1e-4);
    EXPECT_NEAR(fit.t_beta, 50.0, 5e-3);
    EXPECT_NEAR(fit.t1_tilde, 400.0, 0.04);
    EXPECT_LT(fit.residual_rms, 1e-8);
}

TEST(DecayFit, PureExponential) {
    auto t = sample_times();
    std::vector<double> y;
    for (double x : t) y.push_back(std::exp(-x / 300.0));
    auto fit = fit_double_exponential(t, y);
    EXPECT_LT(fit.residual_rms, 1e-6);
    for (double x : {0.0, 300.0, 900.0}) EXPECT_NEAR(fit(x), std::exp(-x / 300.0), 1e-5);
}

TEST(DecayFit, NoisyData) {
    DecayFit truth{1.0, 1.5, 80.0, 500.0, 0.0};
    auto t = sample_times();
    std::mt19937_64 rng(5);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<double> y;
    for (double x : t) y.push_back(truth(x) + noise(rng));
    auto fit = fit_double_exponential(t, y);
    EXPECT_NEAR(fit.beta, 1.5, 0.15);
    EXPECT_NEAR(fit.t1_tilde, 500.0, 50.0);
    EXPECT_LT(fit.residual_rms, 0.015);
}

TEST(DecayFit, RejectsShortOrFlatInput) {
    EXPECT_THROW(fit_double_exponential({0, 1, 2}, {1, 0.5, 0.2}), ParameterError);
    auto t = sample_times();
    std::vector<double> flat(t.size(), 0.8);
    EXPECT_THROW(fit_double_exponential(t, flat), ParameterError);
}

}  // namespace
}  // namespace fluxlab
