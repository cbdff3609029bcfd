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

#ifndef FLUXLAB_TOOLS_OUTPUT_H
#define FLUXLAB_TOOLS_OUTPUT_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace fluxlab::cli {

/// Column-oriented table. Every column has the same length.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const {
        return columns.empty() ? 0 : columns.front().size();
    }
    void add_column(std::string name, std::vector<double> values);
};

/// Shortest round-trip text for a double; "nan", "inf", "-inf" otherwise.
std::string format_number(double x);

/// CSV with a "# fluxlab <command> config=<hash> ..." line, then the header.
std::string to_csv(const Table &table, const std::string &provenance);

/// {"provenance": ..., "columns": [...], "rows": [[...], ...]}; non-finite
/// values become null.
nlohmann::ordered_json to_json(const Table &table, const std::string &provenance);

std::string provenance_line(const std::string &command, std::uint64_t config_hash, std::uint64_t seed);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Polylines with axes, ticks and a legend. Non-finite points break the line.
std::string render_svg(const LinePlot &plot);

struct Heatmap {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
    /// values[iy][ix]; non-finite cells are drawn grey.
    std::vector<std::vector<double>> values;
};

std::string render_svg(const Heatmap &map);

/// Writes `contents` to dir/name, creating dir. Throws std::runtime_error.
void write_file(const std::string &dir, const std::string &name, const std::string &contents);

}  // namespace fluxlab::cli

#endif  // FLUXLAB_TOOLS_OUTPUT_H
