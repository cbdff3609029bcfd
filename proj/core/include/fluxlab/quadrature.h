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

#ifndef FLUXLAB_QUADRATURE_H
#define FLUXLAB_QUADRATURE_H

#include <cmath>
#include <functional>
#include <vector>

namespace fluxlab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Adaptive Simpson over [a, b] split first at `breakpoints` and then into
/// at least `min_panels` equal panels. The absolute tolerance is shared
/// among panels in proportion to their length. Throws NumericError when the
/// recursion depth runs out before the tolerance is met.
QuadratureResult adaptive_simpson(
    const std::function<double(double)> &f,
    double a,
    double b,
    double abs_tol,
    int min_panels = 1,
    const std::vector<double> &breakpoints = {});

/// Composite Simpson with `intervals` equal intervals on each segment
/// between breakpoints (rounded up to even).
double fixed_simpson(
    const std::function<double(double)> &f, double a, double b, int intervals, const std::vector<double> &breakpoints = {});

}  // namespace fluxlab

#endif  // FLUXLAB_QUADRATURE_H
