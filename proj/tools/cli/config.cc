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

#include "config.h"

#include <fstream>
#include <functional>
#include <map>

namespace fluxlab::cli {
namespace {

using json = nlohmann::json;

// Walks one JSON object, dispatching each key to a handler and rejecting
// anything unrecognized.
class ObjectReader {
  public:
    ObjectReader(const json &node, std::string pointer) : node_(node), pointer_(std::move(pointer)) {
        if (!node_.is_object()) {
            throw ConfigError(location() + ": expected an object");
        }
    }

    void number(const std::string &key, double &out) {
        handlers_[key] = [this, key, &out](const json &v) {
            if (!v.is_number()) {
                throw ConfigError(location(key) + ": expected a number");
            }
            out = v.get<double>();
        };
    }

    void integer(const std::string &key, int &out) {
        handlers_[key] = [this, key, &out](const json &v) {
            if (!v.is_number_integer()) {
                throw ConfigError(location(key) + ": expected an integer");
            }
            out = v.get<int>();
        };
    }

    void unsigned_integer(const std::string &key, std::uint64_t &out) {
        handlers_[key] = [this, key, &out](const json &v) {
            if (!v.is_number_unsigned()) {
                throw ConfigError(location(key) + ": expected a non-negative integer");
            }
            out = v.get<std::uint64_t>();
        };
    }

    void string(const std::string &key, std::string &out) {
        handlers_[key] = [this, key, &out](const json &v) {
            if (!v.is_string()) {
                throw ConfigError(location(key) + ": expected a string");
            }
            out = v.get<std::string>();
        };
    }

    void object(const std::string &key, std::function<void(ObjectReader &)> fill) {
        handlers_[key] = [this, key, fill](const json &v) {
            ObjectReader child(v, pointer_ + "/" + key);
            fill(child);
            child.run();
        };
    }

    void run() {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            auto h = handlers_.find(it.key());
            if (h == handlers_.end()) {
                throw ConfigError(location(it.key()) + ": unknown key");
            }
            h->second(it.value());
        }
    }

  private:
    std::string location(const std::string &key = "") const {
        std::string p = key.empty() ? pointer_ : pointer_ + "/" + key;
        return p.empty() ? "/" : p;
    }

    const json &node_;
    std::string pointer_;
    std::map<std::string, std::function<void(const json &)>> handlers_;
};

void read_qubit(ObjectReader &r, QubitParams &q) {
    r.number("e_c_ghz", q.e_c_ghz);
    r.number("e_l_ghz", q.e_l_ghz);
    r.number("e_j_ghz", q.e_j_ghz);
}

}  // namespace

std::uint64_t fnv1a(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

RunConfig parse_config(const json &doc) {
    RunConfig cfg;
    ObjectReader root(doc, "");
    root.object("system", [&](ObjectReader &r) {
        r.object("qubit_a", [&](ObjectReader &q) { read_qubit(q, cfg.system.qubit_a); });
        r.object("qubit_b", [&](ObjectReader &q) { read_qubit(q, cfg.system.qubit_b); });
        r.number("j_bare_ghz", cfg.system.j_bare_ghz);
    });
    root.object("numerics", [&](ObjectReader &r) {
        r.integer("n_basis", cfg.system.n_basis);
        r.integer("levels_per_qubit", cfg.system.levels_per_qubit);
    });
    root.object("noise", [&](ObjectReader &r) {
        r.number("one_over_f_amp_phi0_per_rthz", cfg.noise.one_over_f_amp);
        r.number("white_floor_phi0sq_per_hz", cfg.noise.white_floor);
        r.number("f_low_hz", cfg.noise.f_low_hz);
        r.number("f_high_hz", cfg.noise.f_high_hz);
    });
    root.object("monte_carlo", [&](ObjectReader &r) { r.integer("n_ensembles", cfg.mc_ensembles); });
    root.unsigned_integer("seed", cfg.seed);
    root.object("output", [&](ObjectReader &r) {
        r.string("dir", cfg.out_dir);
        r.string("format", cfg.format);
    });
    root.run();

    try {
        cfg.system.validate();
        cfg.noise.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    if (cfg.mc_ensembles < 100) {
        throw ConfigError("/monte_carlo/n_ensembles: must be at least 100");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw ConfigError("/output/format: expected \"csv\" or \"json\"");
    }
    cfg.system.qubit_a.label = "A";
    cfg.system.qubit_b.label = "B";
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::parse_error &e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    auto qubit = [](const QubitParams &q) {
        return nlohmann::ordered_json{{"e_c_ghz", q.e_c_ghz}, {"e_l_ghz", q.e_l_ghz}, {"e_j_ghz", q.e_j_ghz}};
    };
    j["system"] = {{"qubit_a", qubit(system.qubit_a)}, {"qubit_b", qubit(system.qubit_b)}, {"j_bare_ghz", system.j_bare_ghz}};
    j["numerics"] = {{"n_basis", system.n_basis}, {"levels_per_qubit", system.levels_per_qubit}};
    j["noise"] = {
        {"one_over_f_amp_phi0_per_rthz", noise.one_over_f_amp},
        {"white_floor_phi0sq_per_hz", noise.white_floor},
        {"f_low_hz", noise.f_low_hz},
        {"f_high_hz", noise.f_high_hz}};
    j["monte_carlo"] = {{"n_ensembles", mc_ensembles}};
    j["seed"] = seed;
    j["output"] = {{"dir", out_dir}, {"format", format}};
    return j;
}

std::uint64_t RunConfig::hash() const {
    // Output location and format do not change any number, so they stay out.
    auto j = to_json();
    j.erase("output");
    return fnv1a(j.dump());
}

}  // namespace fluxlab::cli
