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

#ifndef FLUXLAB_TOOLS_COMMANDS_H
#define FLUXLAB_TOOLS_COMMANDS_H

#include <optional>
#include <string>
#include <vector>

#include "config.h"
#include "fluxlab/coupled_system.h"
#include "fluxlab/pulse_schedule.h"

namespace fluxlab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumeric = 3,
    kExitCalibration = 4,
};

struct SpectrumOptions {
    std::string qubit = "A";
    double flux_min = 0.3;
    double flux_max = 0.7;
    int points = 401;
    /// Transitions f01 .. f0k with k = levels.
    int levels = 3;
};

struct CouplingsOptions {
    double flux_min = 0.45;
    double flux_max = 0.55;
    int points = 201;
    std::string model = "both";
};

struct VPhiOptions {
    double amp_a_min = -0.15, amp_a_max = 0.15;
    int amp_a_points = 11;
    double amp_b_min = -0.15, amp_b_max = 0.15;
    int amp_b_points = 11;
    PulseShape shape;
    std::string model = "full";
};

struct CalibrateOptions {
    double delta_phi_a = 0.12;
    double mod_freq_ghz = 0.05;
    double t_cz_ns = 20.0;
    double t_idle_ns = 20.0;
    int n_max = 10;
    std::string model = "full";
};

struct DephasingOptions {
    std::string mode = "all";
    std::vector<double> mod_freqs_mhz = {0.5, 5.0, 50.0};
    double t_max_ns = 2000.0;
    int t_points = 40;
    std::string qubit = "A";
    double delta_phi = 0.0673;
    /// Overrides qubit/delta_phi when set (rad/s per Phi0).
    std::optional<double> alpha;
    bool monte_carlo = false;
};

struct FilterOptions {
    std::vector<std::string> kinds = {"static", "net_zero", "sinusoidal"};
    double f_max_mhz = 200.0;
    int points = 801;
    double t_ns = 20.0;
    double mod_freq_mhz = 50.0;
};

struct BudgetOptions {
    std::string inputs_path;
};

void cmd_spectrum(const RunConfig &cfg, const SpectrumOptions &opt);
void cmd_couplings(const RunConfig &cfg, const CouplingsOptions &opt);
void cmd_vphi_map(const RunConfig &cfg, const VPhiOptions &opt);
void cmd_calibrate_cz(const RunConfig &cfg, const CalibrateOptions &opt);
void cmd_dephasing(const RunConfig &cfg, const DephasingOptions &opt);
void cmd_filter_function(const RunConfig &cfg, const FilterOptions &opt);
void cmd_error_budget(const RunConfig &cfg, const BudgetOptions &opt);

/// Budget report from an inputs document (see configs/budget_inputs.json).
nlohmann::ordered_json evaluate_budget(const RunConfig &cfg, const nlohmann::json &inputs);

/// Parses argv, runs one command and maps exceptions to exit codes.
int run_cli(int argc, const char *const *argv);

}  // namespace fluxlab::cli

#endif  // FLUXLAB_TOOLS_COMMANDS_H
