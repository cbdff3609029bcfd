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

#include "commands.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "fluxlab/fluxlab.h"
#include "output.h"

namespace fluxlab::cli {
namespace {

using ojson = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) {
        throw ParameterError("grid needs at least 2 points and max > min");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Rounded to 12 digits so 0.46 prints as 0.46 and not 0.45999999999999996.
        double x = (lo * (n - 1 - i) + hi * i) / (n - 1);
        out[static_cast<std::size_t>(i)] = std::stod(fmt::format("{:.12g}", x));
    }
    return out;
}

const QubitParams &pick_qubit(const RunConfig &cfg, const std::string &name) {
    if (name == "A" || name == "a") {
        return cfg.system.qubit_a;
    }
    if (name == "B" || name == "b") {
        return cfg.system.qubit_b;
    }
    throw ParameterError("qubit must be A or B, got '" + name + "'");
}

CouplingModel parse_model(const std::string &name) {
    if (name == "full") {
        return CouplingModel::kFull;
    }
    if (name == "simplified") {
        return CouplingModel::kSimplified;
    }
    throw ParameterError("model must be full or simplified, got '" + name + "'");
}

// Writes a table as <stem>.csv or <stem>.json depending on the format.
void emit_table(const RunConfig &cfg, const std::string &stem, const Table &table, const std::string &prov) {
    if (cfg.format == "json") {
        write_file(cfg.out_dir, stem + ".json", to_json(table, prov).dump(2) + "\n");
        std::cout << cfg.out_dir << "/" << stem << ".json\n";
    } else {
        write_file(cfg.out_dir, stem + ".csv", to_csv(table, prov));
        std::cout << cfg.out_dir << "/" << stem << ".csv\n";
    }
}

void emit_svg(const RunConfig &cfg, const std::string &stem, const std::string &svg) {
    write_file(cfg.out_dir, stem + ".svg", svg);
    std::cout << cfg.out_dir << "/" << stem << ".svg\n";
}

void emit_json(const RunConfig &cfg, const std::string &stem, const ojson &doc) {
    write_file(cfg.out_dir, stem + ".json", doc.dump(2) + "\n");
    std::cout << cfg.out_dir << "/" << stem << ".json\n";
}

std::string provenance(const RunConfig &cfg, const std::string &command, const ojson &options) {
    return provenance_line(command, cfg.hash(), cfg.seed) + " options=" + options.dump();
}

ojson number_or_null(double x) {
    return std::isfinite(x) ? ojson(x) : ojson(nullptr);
}

double slope_rad_per_s(const RunConfig &cfg, const QubitParams &q, double delta_phi) {
    return units::angular(units::kGHz * flux_dispersion(q, 0.5 - delta_phi, cfg.system.n_basis));
}

}  // namespace

void cmd_spectrum(const RunConfig &cfg, const SpectrumOptions &opt) {
    const auto &q = pick_qubit(cfg, opt.qubit);
    if (opt.levels < 1 || opt.levels + 1 > cfg.system.n_basis) {
        throw ParameterError("levels must be in [1, n_basis - 1]");
    }
    auto flux = linspace(opt.flux_min, opt.flux_max, opt.points);
    std::vector<std::vector<double>> f(static_cast<std::size_t>(opt.levels));
    for (double x : flux) {
        auto lv = solve_qubit(q, x, opt.levels + 1, cfg.system.n_basis);
        for (int k = 1; k <= opt.levels; ++k) {
            f[static_cast<std::size_t>(k - 1)].push_back(lv.energies[k] - lv.energies[0]);
        }
    }
    ojson o = {{"qubit", q.label}, {"flux_min", opt.flux_min}, {"flux_max", opt.flux_max}, {"points", opt.points},
               {"levels", opt.levels}};
    auto prov = provenance(cfg, "spectrum", o);

    Table t;
    t.add_column("flux_phi0", flux);
    LinePlot plot{"Qubit " + q.label + " spectrum", "flux (Phi0)", "frequency (GHz)", {}};
    for (int k = 1; k <= opt.levels; ++k) {
        auto name = fmt::format("f0{}_ghz", k);
        t.add_column(name, f[static_cast<std::size_t>(k - 1)]);
        plot.series.push_back({fmt::format("f0{}", k), flux, f[static_cast<std::size_t>(k - 1)]});
    }
    emit_table(cfg, "spectrum_" + q.label, t, prov);
    emit_svg(cfg, "spectrum_" + q.label, render_svg(plot));
}

void cmd_couplings(const RunConfig &cfg, const CouplingsOptions &opt) {
    bool full = opt.model == "full" || opt.model == "both";
    bool simple = opt.model == "simplified" || opt.model == "both";
    if (!full && !simple) {
        throw ParameterError("model must be full, simplified or both");
    }
    auto flux = linspace(opt.flux_min, opt.flux_max, opt.points);
    const char *names[] = {"g_xx", "g_zz", "g_xz", "g_zx"};
    auto as_array = [](const CouplingStrengths &g) { return std::array<double, 4>{g.g_xx, g.g_zz, g.g_xz, g.g_zx}; };

    std::array<std::vector<double>, 4> gf, gs;
    TwoLevelParams tlp_a, tlp_b;
    double j_eff = 0.0;
    if (simple) {
        tlp_a = fit_two_level(cfg.system.qubit_a, {}, cfg.system.n_basis);
        tlp_b = fit_two_level(cfg.system.qubit_b, {}, cfg.system.n_basis);
        j_eff = effective_j(cfg.system, tlp_a, tlp_b);
    }
    for (double x : flux) {
        if (full) {
            auto g = as_array(coupling_strengths_full(cfg.system, x, x));
            for (int c = 0; c < 4; ++c) gf[c].push_back(1e3 * g[c]);
        }
        if (simple) {
            auto g = as_array(coupling_strengths_simplified(tlp_a, tlp_b, j_eff, x, x));
            for (int c = 0; c < 4; ++c) gs[c].push_back(1e3 * g[c]);
        }
    }

    ojson o = {{"flux_min", opt.flux_min}, {"flux_max", opt.flux_max}, {"points", opt.points}, {"model", opt.model}};
    auto prov = provenance(cfg, "couplings", o);
    Table t;
    t.add_column("flux_phi0", flux);
    LinePlot plot{"Coupling strengths along Phi_A = Phi_B", "flux (Phi0)", "coupling (MHz)", {}};
    for (int c = 0; c < 4; ++c) {
        if (full) {
            t.add_column(fmt::format("{}_full_mhz", names[c]), gf[c]);
            plot.series.push_back({fmt::format("{} full", names[c]), flux, gf[c]});
        }
        if (simple) {
            t.add_column(fmt::format("{}_simplified_mhz", names[c]), gs[c]);
            plot.series.push_back({fmt::format("{} 2-level", names[c]), flux, gs[c]});
        }
    }
    emit_table(cfg, "couplings", t, prov);
    emit_svg(cfg, "couplings", render_svg(plot));

    if (full && simple) {
        // Gap per component: max |full - simplified| / max |full| over the
        // window [0.48, 0.52] (g_zz crosses zero at 0.5, so a pointwise ratio
        // is meaningless).
        ojson gaps;
        double worst = 0.0;
        int used = 0;
        for (int c = 0; c < 4; ++c) {
            double diff = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < flux.size(); ++i) {
                if (flux[i] < 0.48 - 1e-12 || flux[i] > 0.52 + 1e-12) continue;
                diff = std::max(diff, std::abs(gf[c][i] - gs[c][i]));
                scale = std::max(scale, std::abs(gf[c][i]));
                used += c == 0;
            }
            double gap = scale > 0.0 ? diff / scale : kNaN;
            gaps[names[c]] = number_or_null(gap);
            if (std::isfinite(gap)) worst = std::max(worst, gap);
        }
        ojson summary;
        summary["provenance"] = prov;
        summary["window_phi0"] = {0.48, 0.52};
        summary["samples_in_window"] = used;
        summary["j_eff_mhz"] = 1e3 * j_eff;
        summary["relative_gap"] = gaps;
        summary["max_relative_gap"] = used ? ojson(worst) : ojson(nullptr);
        summary["within_10_percent"] = used > 0 && worst <= 0.10;
        emit_json(cfg, "couplings_summary", summary);
    }
}

void cmd_vphi_map(const RunConfig &cfg, const VPhiOptions &opt) {
    auto amp_a = linspace(opt.amp_a_min, opt.amp_a_max, opt.amp_a_points);
    auto amp_b = linspace(opt.amp_b_min, opt.amp_b_max, opt.amp_b_points);
    ZZModel model(cfg.system, parse_model(opt.model));
    auto map = v_phi_map(model, amp_a, amp_b, opt.shape);

    ojson o = {{"amp_a", {opt.amp_a_min, opt.amp_a_max, opt.amp_a_points}},
               {"amp_b", {opt.amp_b_min, opt.amp_b_max, opt.amp_b_points}},
               {"pulse", pulse_kind_name(opt.shape.kind)},
               {"tau_ns", opt.shape.duration_ns},
               {"rise_ns", opt.shape.rise_time_ns},
               {"mod_freq_ghz", opt.shape.mod_freq_ghz},
               {"model", opt.model}};
    auto prov = provenance(cfg, "vphi-map", o);

    // Rows follow amp_a; one column per amp_b value. Invalid cells are nan.
    Table t;
    t.add_column("amp_a_phi0", amp_a);
    Heatmap hm{"v_phi (rad/us)", "amp B (Phi0)", "amp A (Phi0)", amp_b, amp_a, {}};
    for (std::size_t j = 0; j < amp_b.size(); ++j) {
        std::vector<double> col(amp_a.size());
        for (std::size_t i = 0; i < amp_a.size(); ++i) {
            col[i] = map.v_phi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        t.add_column(fmt::format("vphi_rad_per_us@amp_b={}", format_number(amp_b[j])), col);
    }
    int invalid = 0;
    for (std::size_t i = 0; i < amp_a.size(); ++i) {
        std::vector<double> row(amp_b.size());
        for (std::size_t j = 0; j < amp_b.size(); ++j) {
            row[j] = map.v_phi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            invalid += !map.valid(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        hm.values.push_back(std::move(row));
    }
    emit_table(cfg, "vphi_map", t, prov);
    emit_svg(cfg, "vphi_map", render_svg(hm));
    if (invalid) {
        std::cerr << "note: " << invalid << " cell(s) cross a resonance and are reported as nan\n";
    }
}

void cmd_calibrate_cz(const RunConfig &cfg, const CalibrateOptions &opt) {
    if (opt.n_max < 1) {
        throw ParameterError("n-max must be at least 1");
    }
    ZZModel model(cfg.system, parse_model(opt.model));
    auto res = calibrate_cz(model, opt.delta_phi_a, opt.mod_freq_ghz, opt.t_cz_ns, opt.t_idle_ns);

    ojson o = {{"delta_phi_a_phi0", opt.delta_phi_a}, {"mod_freq_ghz", opt.mod_freq_ghz}, {"t_cz_ns", opt.t_cz_ns},
               {"t_idle_ns", opt.t_idle_ns}, {"n_max", opt.n_max}, {"model", opt.model}};
    auto prov = provenance(cfg, "calibrate-cz", o);

    Table t;
    std::vector<double> n, phase;
    for (int k = 1; k <= opt.n_max; ++k) {
        n.push_back(k);
        phase.push_back(n_gate_conditional_phase(res, k));
    }
    t.add_column("n_gates", n);
    t.add_column("n_phi_wrapped_rad", phase);

    ojson doc;
    doc["provenance"] = prov;
    doc["inputs"] = o;
    doc["result"] = {{"delta_phi_b", res.delta_phi_b}, {"phi", res.phi},           {"phi_pulse", res.phi_pulse},
                     {"phi_idle", res.phi_idle},       {"phi_check", res.phi_check}, {"zeta_a", res.zeta_a},
                     {"zeta_b", res.zeta_b}};
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < n.size(); ++i) {
        rows.push_back({{"n", static_cast<int>(n[i])}, {"phase_rad", phase[i]}});
    }
    doc["n_gate_phase"] = rows;
    emit_json(cfg, "cz_result", doc);
    emit_table(cfg, "cz_ngate", t, prov);
}

void cmd_dephasing(const RunConfig &cfg, const DephasingOptions &opt) {
    bool do_static = opt.mode == "static" || opt.mode == "all";
    bool do_sin = opt.mode == "sinusoidal" || opt.mode == "all";
    bool do_nz = opt.mode == "net_zero" || opt.mode == "all";
    if (!do_static && !do_sin && !do_nz) {
        throw ParameterError("mode must be static, sinusoidal, net_zero or all");
    }
    if (opt.t_points < 2 || !(opt.t_max_ns > 0.0)) {
        throw ParameterError("need t-max-ns > 0 and at least 2 time points");
    }
    double alpha = opt.alpha ? *opt.alpha : slope_rad_per_s(cfg, pick_qubit(cfg, opt.qubit), opt.delta_phi);

    std::vector<double> t_ns;
    for (int i = 1; i <= opt.t_points; ++i) {
        t_ns.push_back(opt.t_max_ns * i / opt.t_points);
    }

    struct Series {
        std::string name;
        std::function<DephasingResult(double)> analytic;
        std::function<double(double)> waveform;
    };
    std::vector<Series> series;
    if (do_static) {
        series.push_back({"static", [&](double t) { return static_dephasing_exponent(alpha, t, cfg.noise); },
                          [alpha](double) { return alpha; }});
    }
    if (do_sin) {
        for (double fm : opt.mod_freqs_mhz) {
            if (!(fm > 0.0)) {
                throw ParameterError("modulation frequencies must be positive");
            }
            double wm = units::angular(fm * 1e6);
            // Slope alpha sin(w t + pi/2) = alpha cos(w t).
            series.push_back({fmt::format("sinusoidal_{}mhz", format_number(fm)),
                              [&cfg, alpha, wm](double t) { return sinusoidal_dephasing_exponent(alpha, wm, t, cfg.noise); },
                              [alpha, wm](double t) { return alpha * std::cos(wm * t); }});
        }
    }
    if (do_nz) {
        series.push_back({"net_zero", [&](double t) { return net_zero_dephasing_exponent(alpha, t, cfg.noise); }, {}});
    }

    ojson o = {{"mode", opt.mode},       {"mod_freqs_mhz", opt.mod_freqs_mhz}, {"t_max_ns", opt.t_max_ns},
               {"t_points", opt.t_points}, {"alpha_rad_per_s_per_phi0", alpha},  {"monte_carlo", opt.monte_carlo}};
    auto prov = provenance(cfg, "dephasing", o);

    Table t;
    t.add_column("t_ns", t_ns);
    LinePlot plot{"Dephasing envelope", "t (ns)", "exp(-<dphi^2>/2)", {}};
    ojson t2 = ojson::object();
    for (const auto &s : series) {
        std::vector<double> expo, decay, mc, mc_se;
        for (double tn : t_ns) {
            auto r = s.analytic(tn * units::kNs);
            expo.push_back(r.exponent);
            decay.push_back(r.decay);
            if (opt.monte_carlo) {
                double ts = tn * units::kNs;
                // Net-zero waveform needs the total time to place the flip.
                auto wf = s.waveform ? s.waveform : std::function<double(double)>([alpha, ts](double x) {
                    return x < ts / 2 ? alpha : -alpha;
                });
                auto m = mc_dephasing(wf, ts, cfg.noise, {cfg.mc_ensembles, cfg.seed, 0.0});
                mc.push_back(m.exponent);
                mc_se.push_back(m.standard_error);
            }
        }
        auto t2v = t2_from_decay(t_ns, decay);
        t2[s.name] = t2v ? ojson(*t2v) : ojson(nullptr);
        plot.series.push_back({s.name, t_ns, decay});
        t.add_column("exponent_" + s.name, expo);
        t.add_column("decay_" + s.name, decay);
        if (opt.monte_carlo) {
            t.add_column("mc_exponent_" + s.name, mc);
            t.add_column("mc_stderr_" + s.name, mc_se);
        }
    }
    emit_table(cfg, "dephasing", t, prov);
    emit_svg(cfg, "dephasing", render_svg(plot));
    ojson summary;
    summary["provenance"] = prov;
    summary["alpha_rad_per_s_per_phi0"] = alpha;
    summary["t2_ns"] = t2;
    emit_json(cfg, "dephasing_summary", summary);
}

void cmd_filter_function(const RunConfig &cfg, const FilterOptions &opt) {
    if (!(opt.t_ns > 0.0) || !(opt.f_max_mhz > 0.0)) {
        throw ParameterError("t-ns and f-max-mhz must be positive");
    }
    auto f = linspace(0.0, opt.f_max_mhz, opt.points);
    double ts = opt.t_ns * units::kNs, wm = units::angular(opt.mod_freq_mhz * 1e6);
    ojson o = {{"kinds", opt.kinds}, {"f_max_mhz", opt.f_max_mhz}, {"points", opt.points}, {"t_ns", opt.t_ns},
               {"mod_freq_mhz", opt.mod_freq_mhz}};
    auto prov = provenance(cfg, "filter-function", o);

    Table t;
    t.add_column("f_mhz", f);
    LinePlot plot{"Noise filter function", "f (MHz)", "g(omega, t)", {}};
    for (const auto &k : opt.kinds) {
        FilterKind kind;
        if (k == "static") {
            kind = FilterKind::kStatic;
        } else if (k == "net_zero") {
            kind = FilterKind::kNetZero;
        } else if (k == "sinusoidal") {
            kind = FilterKind::kSinusoidal;
        } else {
            throw ParameterError("unknown filter kind '" + k + "'");
        }
        std::vector<double> g;
        for (double x : f) {
            g.push_back(filter_function(kind, units::angular(x * 1e6), ts, wm));
        }
        plot.series.push_back({k, f, g});
        t.add_column("g_" + k, std::move(g));
    }
    emit_table(cfg, "filter_function", t, prov);
    emit_svg(cfg, "filter_function", render_svg(plot));
}

namespace {

// Strict reader for the budget inputs document: a section, when present,
// must contain exactly the listed keys.
struct Section {
    const nlohmann::json *node = nullptr;
    std::string pointer;

    double get(const std::string &key) const {
        const auto &v = (*node)[key];
        if (!v.is_number()) {
            throw ConfigError(pointer + "/" + key + ": expected a number");
        }
        return v.get<double>();
    }
};

std::optional<Section> section(const nlohmann::json &doc, const std::string &name, const std::vector<std::string> &keys) {
    if (!doc.contains(name)) {
        return std::nullopt;
    }
    Section s{&doc[name], "/" + name};
    if (!s.node->is_object()) {
        throw ConfigError(s.pointer + ": expected an object");
    }
    for (auto it = s.node->begin(); it != s.node->end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
            throw ConfigError(s.pointer + "/" + it.key() + ": unknown key");
        }
    }
    for (const auto &k : keys) {
        if (!s.node->contains(k)) {
            throw ConfigError(s.pointer + "/" + k + ": missing");
        }
    }
    return s;
}

}  // namespace

ojson evaluate_budget(const RunConfig &cfg, const nlohmann::json &inputs) {
    if (!inputs.is_object()) {
        throw ConfigError("/: expected an object");
    }
    for (auto it = inputs.begin(); it != inputs.end(); ++it) {
        static const std::vector<std::string> top = {"clifford", "idle", "operating_point", "t1", "delta_phi_rad"};
        if (std::find(top.begin(), top.end(), it.key()) == top.end()) {
            throw ConfigError("/" + it.key() + ": unknown key");
        }
    }
    ojson out;

    ojson clifford = {{"per_layer_sum", 0.0}, {"single_rate", 0.0}, {"reference", 0.0}, {"note", ""}};
    if (auto s = section(inputs, "clifford", {"r_sq_a", "r_sq_b", "r_cz", "reference"})) {
        auto rep = clifford_report(s->get("r_sq_a"), s->get("r_sq_b"), s->get("r_cz"), s->get("reference"));
        clifford = {{"per_layer_sum", rep.per_layer_sum}, {"single_rate", rep.single_rate}, {"reference", rep.reference},
                    {"note", rep.note}};
    }
    out["clifford_error"] = clifford;

    double r_idle = 0.0;
    if (auto s = section(inputs, "idle", {"r_idle_a", "r_idle_b", "t_gate_ns", "t_target_ns"})) {
        r_idle = idle_scaling(s->get("r_idle_a"), s->get("r_idle_b"), s->get("t_gate_ns"), s->get("t_target_ns"));
    }
    out["idle_scaling"] = r_idle;

    ErrorBudget sin_budget;
    sin_budget.qubits[0].t1_idle_ns = sin_budget.qubits[1].t1_idle_ns = std::numeric_limits<double>::infinity();
    if (auto s = section(inputs, "t1", {"idle_a_ns", "idle_b_ns", "cz_a_ns", "cz_b_ns"})) {
        sin_budget.qubits[0].t1_idle_ns = s->get("idle_a_ns");
        sin_budget.qubits[1].t1_idle_ns = s->get("idle_b_ns");
        sin_budget.qubits[0].t1_cz_ns = s->get("cz_a_ns");
        sin_budget.qubits[1].t1_cz_ns = s->get("cz_b_ns");
    }
    ErrorBudget static_budget = sin_budget;
    double alpha_a = 0.0, alpha_b = 0.0, r_sin = 0.0, r_static = 0.0;
    if (auto s = section(
            inputs, "operating_point", {"delta_phi_a_phi0", "delta_phi_b_phi0", "mod_freq_ghz", "t_cz_ns", "t_idle_ns"})) {
        alpha_a = slope_rad_per_s(cfg, cfg.system.qubit_a, s->get("delta_phi_a_phi0"));
        alpha_b = slope_rad_per_s(cfg, cfg.system.qubit_b, s->get("delta_phi_b_phi0"));
        double wm = units::angular(s->get("mod_freq_ghz") * units::kGHz);
        double t_cz = s->get("t_cz_ns");
        for (auto *b : {&sin_budget, &static_budget}) {
            b->t_cz_ns = t_cz;
            b->t_idle_ns = s->get("t_idle_ns");
        }
        if (t_cz > 0.0) {
            double ts = t_cz * units::kNs;
            // The static reference replaces the oscillating slope by its rms.
            double alphas[] = {alpha_a, alpha_b};
            for (int i = 0; i < 2; ++i) {
                sin_budget.qubits[i].oneoverf_cz = sinusoidal_dephasing_exponent(alphas[i], wm, ts, cfg.noise).phase_variance;
                static_budget.qubits[i].oneoverf_cz =
                    static_dephasing_exponent(alphas[i] / std::sqrt(2.0), ts, cfg.noise).phase_variance;
            }
        }
        // 1/f part alone: same sum with T1 removed.
        auto one_over_f_only = [](ErrorBudget b) {
            for (auto &q : b.qubits) {
                q.t1_idle_ns = std::numeric_limits<double>::infinity();
                q.t1_cz_ns.reset();
            }
            return decoherence_limit(b);
        };
        r_sin = one_over_f_only(sin_budget);
        r_static = one_over_f_only(static_budget);
    }
    out["one_over_f"] = {{"alpha_a_rad_per_s_per_phi0", alpha_a},
                         {"alpha_b_rad_per_s_per_phi0", alpha_b},
                         {"sinusoidal_filter", r_sin},
                         {"static_filter", r_static}};
    out["decoherence_limit"] = {{"sinusoidal_filter", decoherence_limit(sin_budget)},
                                {"static_filter", decoherence_limit(static_budget)}};

    double dphi = 0.0;
    if (inputs.contains("delta_phi_rad")) {
        if (!inputs["delta_phi_rad"].is_number()) {
            throw ConfigError("/delta_phi_rad: expected a number");
        }
        dphi = inputs["delta_phi_rad"].get<double>();
    }
    auto pi = phase_uncertainty_infidelity(dphi);
    out["phase_uncertainty"] = {{"delta_phi_rad", dphi},
                                {"average_gate_infidelity", pi.average_gate_infidelity},
                                {"quadratic_variant", pi.quadratic_variant}};
    return out;
}

void cmd_error_budget(const RunConfig &cfg, const BudgetOptions &opt) {
    std::ifstream in(opt.inputs_path);
    if (!in) {
        throw ConfigError("cannot open inputs file '" + opt.inputs_path + "'");
    }
    nlohmann::json inputs;
    try {
        inputs = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("inputs '" + opt.inputs_path + "' is not valid JSON: " + e.what());
    }
    ojson doc;
    doc["provenance"] = provenance(cfg, "error-budget", ojson{{"inputs_hash", fmt::format("{:016x}", fnv1a(inputs.dump()))}});
    auto report = evaluate_budget(cfg, inputs);
    for (auto it = report.begin(); it != report.end(); ++it) {
        doc[it.key()] = it.value();
    }
    emit_json(cfg, "error_budget", doc);
}

int run_cli(int argc, const char *const *argv) {
    CLI::App app{"fluxlab: coupled-fluxonium gate and noise analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, format;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "JSON configuration file (defaults built in)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "random seed for Monte Carlo runs");

    SpectrumOptions sp;
    auto *c_sp = app.add_subcommand("spectrum", "single-qubit transition frequencies versus flux");
    c_sp->add_option("--qubit", sp.qubit)->check(CLI::IsMember({"A", "B"}));
    c_sp->add_option("--flux-min", sp.flux_min);
    c_sp->add_option("--flux-max", sp.flux_max);
    c_sp->add_option("--points", sp.points);
    c_sp->add_option("--levels", sp.levels, "highest excited level k (columns f01..f0k)");

    CouplingsOptions co;
    auto *c_co = app.add_subcommand("couplings", "g_xx, g_zz, g_xz, g_zx along Phi_A = Phi_B");
    c_co->add_option("--flux-min", co.flux_min);
    c_co->add_option("--flux-max", co.flux_max);
    c_co->add_option("--points", co.points);
    c_co->add_option("--model", co.model)->check(CLI::IsMember({"full", "simplified", "both"}));

    VPhiOptions vp;
    std::string vp_kind = "square_tanh";
    auto *c_vp = app.add_subcommand("vphi-map", "conditional-phase speed over pulse amplitudes");
    c_vp->add_option("--amp-a-min", vp.amp_a_min);
    c_vp->add_option("--amp-a-max", vp.amp_a_max);
    c_vp->add_option("--amp-a-points", vp.amp_a_points);
    c_vp->add_option("--amp-b-min", vp.amp_b_min);
    c_vp->add_option("--amp-b-max", vp.amp_b_max);
    c_vp->add_option("--amp-b-points", vp.amp_b_points);
    c_vp->add_option("--pulse", vp_kind)->check(CLI::IsMember({"constant", "square_tanh", "net_zero", "sinusoidal"}));
    c_vp->add_option("--tau-ns", vp.shape.duration_ns);
    c_vp->add_option("--rise-ns", vp.shape.rise_time_ns);
    c_vp->add_option("--mod-freq-ghz", vp.shape.mod_freq_ghz, "sinusoidal only; 0 means one period");
    c_vp->add_option("--model", vp.model)->check(CLI::IsMember({"full", "simplified"}));

    CalibrateOptions ca;
    auto *c_ca = app.add_subcommand("calibrate-cz", "find delta_phi_b giving phi = pi");
    c_ca->add_option("--delta-phi-a", ca.delta_phi_a, "Phi0");
    c_ca->add_option("--mod-freq-ghz", ca.mod_freq_ghz);
    c_ca->add_option("--t-cz-ns", ca.t_cz_ns);
    c_ca->add_option("--t-idle-ns", ca.t_idle_ns);
    c_ca->add_option("--n-max", ca.n_max, "rows of the N-gate phase table");
    c_ca->add_option("--model", ca.model)->check(CLI::IsMember({"full", "simplified"}));

    DephasingOptions de;
    double de_alpha = 0.0;
    auto *c_de = app.add_subcommand("dephasing", "1/f dephasing exponents and T2");
    c_de->add_option("--mode", de.mode)->check(CLI::IsMember({"static", "sinusoidal", "net_zero", "all"}));
    c_de->add_option("--mod-freq-mhz", de.mod_freqs_mhz)->delimiter(',');
    c_de->add_option("--t-max-ns", de.t_max_ns);
    c_de->add_option("--t-points", de.t_points);
    c_de->add_option("--qubit", de.qubit)->check(CLI::IsMember({"A", "B"}));
    c_de->add_option("--delta-phi", de.delta_phi, "distance from half flux setting the slope (Phi0)");
    auto *alpha_opt = c_de->add_option("--alpha", de_alpha, "slope in rad/s per Phi0 (overrides --qubit/--delta-phi)");
    c_de->add_flag("--mc", de.monte_carlo, "add Monte Carlo columns");

    FilterOptions fi;
    auto *c_fi = app.add_subcommand("filter-function", "noise filter functions versus frequency");
    c_fi->add_option("--kinds", fi.kinds)->delimiter(',');
    c_fi->add_option("--f-max-mhz", fi.f_max_mhz);
    c_fi->add_option("--points", fi.points);
    c_fi->add_option("--t-ns", fi.t_ns);
    c_fi->add_option("--mod-freq-mhz", fi.mod_freq_mhz);

    BudgetOptions bu;
    auto *c_bu = app.add_subcommand("error-budget", "gate error budget from an inputs file");
    c_bu->add_option("--inputs", bu.inputs_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        RunConfig cfg = config_path.empty() ? parse_config(nlohmann::json::object()) : load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) cfg.format = format;
        if (seed) cfg.seed = *seed;
        for (const auto &w : cfg.system.warnings()) {
            std::cerr << "warning: " << w << "\n";
        }

        if (c_sp->parsed()) {
            cmd_spectrum(cfg, sp);
        } else if (c_co->parsed()) {
            cmd_couplings(cfg, co);
        } else if (c_vp->parsed()) {
            vp.shape.kind = parse_pulse_kind(vp_kind);
            cmd_vphi_map(cfg, vp);
        } else if (c_ca->parsed()) {
            cmd_calibrate_cz(cfg, ca);
        } else if (c_de->parsed()) {
            if (alpha_opt->count()) de.alpha = de_alpha;
            cmd_dephasing(cfg, de);
        } else if (c_fi->parsed()) {
            cmd_filter_function(cfg, fi);
        } else if (c_bu->parsed()) {
            cmd_error_budget(cfg, bu);
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParameterError &e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CalibrationError &e) {
        std::cerr << "calibration failed: " << e.what() << "\n";
        return kExitCalibration;
    } catch (const NumericError &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace fluxlab::cli
