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

#include <bit>
#include <cstdint>

#include "fluxlab/coupled_system.h"

namespace fluxlab {
namespace {

constexpr std::size_t kMaxCacheEntries = 1 << 16;

}  // namespace

ZZModel::ZZModel(const CoupledSystem &sys, CouplingModel model) : sys_(sys), model_(model) {
    sys_.validate();
    tlp_a_ = fit_two_level(sys_.qubit_a, {}, sys_.n_basis);
    tlp_b_ = fit_two_level(sys_.qubit_b, {}, sys_.n_basis);
    j_eff_ = effective_j(sys_, tlp_a_, tlp_b_);
    if (model_ == CouplingModel::kFull) {
        auto idle = dressed(0.5, 0.5);
        zeta_idle_ = idle.zeta();
        freq_a_idle_ = idle.freq_a_given_b_ground();
        freq_b_idle_ = idle.freq_b_given_a_ground();
    } else {
        zeta_idle_ = zeta(0.5, 0.5);
        freq_a_idle_ = tlp_a_.frequency(0.5);
        freq_b_idle_ = tlp_b_.frequency(0.5);
    }
}

const QubitLevels &ZZModel::levels(bool qubit_a, double flux) {
    auto &cache = qubit_a ? cache_a_ : cache_b_;
    auto key = std::bit_cast<std::uint64_t>(flux);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    if (cache.size() >= kMaxCacheEntries) {
        cache.clear();
    }
    const auto &params = qubit_a ? sys_.qubit_a : sys_.qubit_b;
    return cache.emplace(key, solve_qubit(params, flux, sys_.levels_per_qubit, sys_.n_basis)).first->second;
}

DressedLevels ZZModel::dressed(double flux_a, double flux_b) {
    const auto &a = levels(true, flux_a);
    const auto &b = levels(false, flux_b);
    return dressed_levels(sys_, a, b);
}

double ZZModel::zeta(double flux_a, double flux_b) {
    if (model_ == CouplingModel::kFull) {
        return dressed(flux_a, flux_b).zeta();
    }
    return 4.0 * coupling_strengths_simplified(tlp_a_, tlp_b_, j_eff_, flux_a, flux_b).g_zz;
}

double ZZModel::freq_a(double flux_a, double flux_b) {
    if (model_ == CouplingModel::kFull) {
        return dressed(flux_a, flux_b).freq_a_given_b_ground();
    }
    return tlp_a_.frequency(flux_a);
}

double ZZModel::freq_b(double flux_a, double flux_b) {
    if (model_ == CouplingModel::kFull) {
        return dressed(flux_a, flux_b).freq_b_given_a_ground();
    }
    return tlp_b_.frequency(flux_b);
}

}  // namespace fluxlab
