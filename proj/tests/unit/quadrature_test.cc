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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fluxlab/errors.h"

namespace fluxlab {
namespace {

TEST(AdaptiveSimpson, Polynomials) {
    // Exact for cubics.
    auto r = adaptive_simpson([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0, 3.0, 1e-12);
    EXPECT_NEAR(r.value, 20.0 - 8.0 + 4.0, 1e-12);
    EXPECT_GT(r.evaluations, 0);
    EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0, 1e-9).value, 0.0);
}

TEST(AdaptiveSimpson, OscillatoryMeetsTolerance) {
    double w = 40.0;
    auto r = adaptive_simpson([&](double x) { return std::cos(w * x); }, 0.0, 1.0, 1e-10, 8);
    EXPECT_NEAR(r.value, std::sin(w) / w, 1e-9);
    EXPECT_LT(r.error_estimate, 1e-9);
}

TEST(AdaptiveSimpson, BreakpointsMakeKinksExact) {
    auto kink = [](double x) { return std::abs(x - 0.3); };
    auto r = adaptive_simpson(kink, 0.0, 1.0, 1e-12, 1, {0.3});
    EXPECT_NEAR(r.value, 0.045 + 0.245, 1e-14);
    // Linear pieces: the first refinement already meets the tolerance.
    EXPECT_LE(r.evaluations, 12);
    EXPECT_NEAR(fixed_simpson(kink, 0.0, 1.0, 10, {0.3}), 0.29, 1e-14);
    EXPECT_GT(std::abs(fixed_simpson(kink, 0.0, 1.0, 10) - 0.29), 1e-4);
}

TEST(AdaptiveSimpson, RejectsBadInput) {
    auto f = [](double x) { return x; };
    EXPECT_THROW(adaptive_simpson(f, 1.0, 0.0, 1e-9), ParameterError);
    EXPECT_THROW(adaptive_simpson(f, 0.0, 1.0, 0.0), ParameterError);
    EXPECT_THROW(adaptive_simpson(f, 0.0, 1.0, 1e-9, 0), ParameterError);
    auto bad = [](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 0.0; };
    EXPECT_THROW(adaptive_simpson(bad, 0.0, 1.0, 1e-9), NumericError);
}

TEST(FixedSimpson, ConvergesAtFourthOrder) {
    auto f = [](double x) { return std::exp(x); };
    double exact = std::exp(1.0) - 1.0;
    double e1 = std::abs(fixed_simpson(f, 0.0, 1.0, 8) - exact);
    double e2 = std::abs(fixed_simpson(f, 0.0, 1.0, 16) - exact);
    EXPECT_NEAR(e1 / e2, 16.0, 0.5);
}

}  // namespace
}  // namespace fluxlab
