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

#ifndef FLUXLAB_UNITS_H
#define FLUXLAB_UNITS_H

#include <numbers>

/// Unit conventions used throughout fluxlab.
///
/// User-facing energies are linear frequencies E/h in GHz, times are in ns
/// (so GHz * ns is a number of cycles), and external flux is expressed in
/// units of the flux quantum. The noise module works in SI (s, Hz, rad/s)
/// because flux-noise spectra are quoted per Hz.
///
/// Every conversion between cycles and radians goes through this header.
namespace fluxlab::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Cycles (or a linear frequency) to radians (or an angular frequency).
constexpr double angular(double linear) {
    return kTwoPi * linear;
}

/// Radians (or an angular frequency) to cycles (or a linear frequency).
constexpr double linear(double angular) {
    return angular / kTwoPi;
}

/// Reduced phase 2*pi*Phi/Phi0 for an external flux given in Phi0.
constexpr double flux_phase(double flux_phi0) {
    return kTwoPi * flux_phi0;
}

inline constexpr double kGHz = 1e9;
inline constexpr double kNs = 1e-9;

/// rad/ns -> rad/us.
constexpr double per_ns_to_per_us(double value) {
    return value * 1e3;
}

// CODATA 2018 exact values.
inline constexpr double kPlanck = 6.62607015e-34;
inline constexpr double kElementaryCharge = 1.602176634e-19;
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElementaryCharge);

}  // namespace fluxlab::units

#endif  // FLUXLAB_UNITS_H
