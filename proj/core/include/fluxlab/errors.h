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

#ifndef FLUXLAB_ERRORS_H
#define FLUXLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace fluxlab {

/// An input lies outside the domain an operation accepts.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed (non-convergence, bad fit, broken invariant).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dressed computational states could not be identified because the
/// operating point sits inside a resonance (maximum bare overlap too small).
struct LabelingError : NumericError {
    double flux_a;
    double flux_b;
    double max_overlap;

    LabelingError(double flux_a, double flux_b, double max_overlap);
};

/// calibrate_cz could not bracket a root on the allowed amplitude range.
struct CalibrationError : std::runtime_error {
    double phi_min;
    double phi_max;

    CalibrationError(const std::string &what, double phi_min, double phi_max);
};

}  // namespace fluxlab

#endif  // FLUXLAB_ERRORS_H
