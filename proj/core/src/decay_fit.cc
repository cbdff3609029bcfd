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

#include <algorithm>
#include <cmath>
#include <limits>

#include "fluxlab/errors.h"
#include "fluxlab/noise_dephasing.h"
#include "least_squares.h"

namespace fluxlab {

std::optional<double> t2_from_decay(const std::vector<double> &times, const std::vector<double> &decay) {
    if (times.size() != decay.size() || times.size() < 2) {
        throw ParameterError("t2_from_decay needs at least 2 matching samples");
    }
    const double level = std::exp(-1.0);
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (decay[i - 1] >= level && decay[i] < level) {
            double frac = (decay[i - 1] - level) / (decay[i - 1] - decay[i]);
            return times[i - 1] + frac * (times[i] - times[i - 1]);
        }
    }
    return std::nullopt;
}

double DecayFit::operator()(double t) const {
    return amplitude * std::exp(beta * (std::exp(-t / t_beta) - 1.0)) * std::exp(-t / t1_tilde);
}

namespace {

// Parameters are (amplitude, sqrt(beta), ln t_beta, ln t1) so positivity is automatic.
DecayFit unpack(const Eigen::VectorXd &p) {
    DecayFit f;
    f.amplitude = p[0];
    f.beta = p[1] * p[1];
    f.t_beta = std::exp(p[2]);
    f.t1_tilde = std::exp(p[3]);
    return f;
}

double first_e_fold(const std::vector<double> &t, const std::vector<double> &y) {
    double level = y.front() * std::exp(-1.0);
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (y[i] < level) {
            return t[i];
        }
    }
    return t.back();
}

// Log-slope over the samples within the last decade of the curve.
double tail_time(const std::vector<double> &t, const std::vector<double> &y) {
    double floor = std::max(y.back(), std::numeric_limits<double>::min());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (y[i] > 0.0 && y[i] <= 10.0 * floor) {
            double ly = std::log(y[i]);
            sx += t[i];
            sy += ly;
            sxx += t[i] * t[i];
            sxy += t[i] * ly;
            ++n;
        }
    }
    if (n >= 2) {
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        if (slope < 0.0 && std::isfinite(slope)) {
            return -1.0 / slope;
        }
    }
    return t.back();
}

}  // namespace

DecayFit fit_double_exponential(const std::vector<double> &times, const std::vector<double> &values) {
    if (times.size() != values.size() || times.size() < 8) {
        throw ParameterError("fit_double_exponential needs at least 8 matching samples");
    }
    double y_max = *std::max_element(values.begin(), values.end());
    double y_min = *std::min_element(values.begin(), values.end());
    if (!(y_max > 0.0) || y_min > y_max / 10.0) {
        throw ParameterError("decay curve must span at least one decade");
    }
    auto n = static_cast<int>(times.size());
    auto residual = [&](const Eigen::VectorXd &p, Eigen::VectorXd &r) {
        auto f = unpack(p);
        for (int i = 0; i < n; ++i) {
            r[i] = f(times[i]) - values[i];
        }
    };

    double t_beta0 = first_e_fold(times, values);
    double t1_0 = tail_time(times, values);
    const double starts[][2] = {{1.0, 1.0}, {0.3, 0.5}, {3.0, 2.0}, {1.0, 0.2}, {0.05, 1.0}};

    DecayFit best;
    best.residual_rms = std::numeric_limits<double>::infinity();
    for (const auto &s : starts) {
        Eigen::VectorXd p0(4);
        p0 << values.front(), std::sqrt(s[0]), std::log(t_beta0 * s[1]), std::log(t1_0);
        auto fit = detail::minimize(residual, p0, n, 8000);
        if (fit.converged && fit.rms < best.residual_rms) {
            best = unpack(fit.params);
            best.residual_rms = fit.rms;
        }
    }
    if (!std::isfinite(best.residual_rms)) {
        throw NumericError("double-exponential fit did not converge after restarts");
    }
    return best;
}

}  // namespace fluxlab
