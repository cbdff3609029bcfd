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

#include "fluxlab/quadrature.h"

#include <algorithm>

#include "fluxlab/errors.h"

namespace fluxlab {
namespace {

constexpr int kMaxDepth = 40;

struct Simpson {
    const std::function<double(double)> &f;
    int evaluations = 0;
    double error = 0.0;

    double eval(double x) {
        ++evaluations;
        double y = f(x);
        if (!std::isfinite(y)) {
            throw NumericError("integrand is not finite at t = " + std::to_string(x));
        }
        return y;
    }

    double refine(double a, double fa, double m, double fm, double b, double fb, double whole, double tol, int depth) {
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        double flm = eval(lm);
        double frm = eval(rm);
        double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            error += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth >= kMaxDepth) {
            throw NumericError("adaptive Simpson did not reach tolerance on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
        }
        return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
               refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
    }
};

std::vector<double> segment_edges(double a, double b, const std::vector<double> &breakpoints) {
    std::vector<double> edges{a};
    std::vector<double> sorted = breakpoints;
    std::sort(sorted.begin(), sorted.end());
    for (double x : sorted) {
        if (x > edges.back() && x < b) {
            edges.push_back(x);
        }
    }
    edges.push_back(b);
    return edges;
}

}  // namespace

QuadratureResult adaptive_simpson(
    const std::function<double(double)> &f,
    double a,
    double b,
    double abs_tol,
    int min_panels,
    const std::vector<double> &breakpoints) {
    if (!(b >= a) || !(abs_tol > 0.0) || min_panels < 1) {
        throw ParameterError("adaptive_simpson needs b >= a, abs_tol > 0 and min_panels >= 1");
    }
    QuadratureResult out;
    if (b == a) {
        return out;
    }
    Simpson s{f};
    auto edges = segment_edges(a, b, breakpoints);
    double length = b - a;
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        double lo = edges[k];
        double hi = edges[k + 1];
        int panels = std::max(1, static_cast<int>(std::ceil(min_panels * (hi - lo) / length)));
        double h = (hi - lo) / panels;
        double x0 = lo;
        double f0 = s.eval(x0);
        for (int p = 0; p < panels; ++p) {
            double x1 = p + 1 == panels ? hi : lo + (p + 1) * h;
            double m = 0.5 * (x0 + x1);
            double fm = s.eval(m);
            double f1 = s.eval(x1);
            double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
            total += s.refine(x0, f0, m, fm, x1, f1, whole, abs_tol * (x1 - x0) / length, 0);
            x0 = x1;
            f0 = f1;
        }
    }
    out.value = total;
    out.error_estimate = s.error;
    out.evaluations = s.evaluations;
    return out;
}

double fixed_simpson(
    const std::function<double(double)> &f, double a, double b, int intervals, const std::vector<double> &breakpoints) {
    if (!(b >= a) || intervals < 2) {
        throw ParameterError("fixed_simpson needs b >= a and at least 2 intervals");
    }
    if (b == a) {
        return 0.0;
    }
    auto edges = segment_edges(a, b, breakpoints);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        double lo = edges[k];
        double hi = edges[k + 1];
        int n = std::max(2, static_cast<int>(std::ceil(intervals * (hi - lo) / (b - a))));
        n += n % 2;
        double h = (hi - lo) / n;
        double sum = f(lo) + f(hi);
        for (int i = 1; i < n; ++i) {
            sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
        }
        total += sum * h / 3.0;
    }
    return total;
}

}  // namespace fluxlab
