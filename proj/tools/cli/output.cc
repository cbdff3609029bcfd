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

#include "output.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace fluxlab::cli {

void Table::add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != rows()) {
        throw std::logic_error("column '" + name + "' has the wrong length");
    }
    header.push_back(std::move(name));
    columns.push_back(std::move(values));
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return fmt::format("{}", x);
}

std::string provenance_line(const std::string &command, std::uint64_t config_hash, std::uint64_t seed) {
    return fmt::format("fluxlab {} config={:016x} seed={}", command, config_hash, seed);
}

std::string to_csv(const Table &table, const std::string &provenance) {
    std::string out = "# " + provenance + "\n";
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out += (c ? "," : "") + table.header[c];
    }
    out += "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out += (c ? "," : "") + format_number(table.columns[c][r]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const Table &table, const std::string &provenance) {
    nlohmann::ordered_json j;
    j["provenance"] = provenance;
    j["columns"] = table.header;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < table.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (const auto &col : table.columns) {
            if (std::isfinite(col[r])) {
                row.push_back(col[r]);
            } else {
                row.push_back(nullptr);
            }
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 80, kRight = 160, kTop = 40, kBottom = 60;
const char *const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finish() {
        if (!std::isfinite(lo)) {
            lo = 0.0, hi = 1.0;
        } else if (hi == lo) {
            double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
            lo -= pad, hi += pad;
        }
    }
    double map(double v, double a, double b) const {
        return a + (v - lo) / (hi - lo) * (b - a);
    }
};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick(double v) {
    return fmt::format("{:.4g}", v);
}

std::string frame(const std::string &title, const std::string &xl, const std::string &yl, const Range &xr, const Range &yr) {
    double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        kWidth, kHeight);
    s += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", (x0 + x1) / 2, escape(title));
    s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", x0, y1, x1 - x0, y0 - y1);
    for (int i = 0; i <= 4; ++i) {
        double fx = xr.lo + i * (xr.hi - xr.lo) / 4, px = xr.map(fx, x0, x1);
        double fy = yr.lo + i * (yr.hi - yr.lo) / 4, py = yr.map(fy, y0, y1);
        s += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>\n", px, y0, y0 + 5);
        s += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", px, y0 + 18, tick(fx));
        s += fmt::format("<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n", x0 - 5, py, x0);
        s += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", x0 - 8, py + 4, tick(fy));
    }
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (x0 + x1) / 2, kHeight - 18, escape(xl));
    s += fmt::format(
        "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">{1}</text>\n", (y0 + y1) / 2, escape(yl));
    return s;
}

}  // namespace

std::string render_svg(const LinePlot &plot) {
    Range xr, yr;
    for (const auto &s : plot.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                xr.include(s.x[i]);
                yr.include(s.y[i]);
            }
        }
    }
    xr.finish();
    yr.finish();
    std::string out = frame(plot.title, plot.x_label, plot.y_label, xr, yr);
    double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto &s = plot.series[k];
        const char *color = kColors[k % std::size(kColors)];
        std::string pts;
        auto flush = [&] {
            if (!pts.empty()) {
                out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color, pts);
                pts.clear();
            }
        };
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            pts += fmt::format("{}{:.2f},{:.2f}", pts.empty() ? "" : " ", xr.map(s.x[i], x0, x1), yr.map(s.y[i], y0, y1));
        }
        flush();
        double ly = kTop + 16 + 18 * static_cast<double>(k);
        out += fmt::format(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>\n", x1 + 12, ly, x1 + 32, color);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", x1 + 38, ly + 4, escape(s.label));
    }
    return out + "</svg>\n";
}

std::string render_svg(const Heatmap &map) {
    Range xr, yr, zr;
    for (double v : map.x) xr.include(v);
    for (double v : map.y) yr.include(v);
    for (const auto &row : map.values) {
        for (double v : row) zr.include(v);
    }
    // Cells are centred on the grid values, so pad by half a step.
    auto pad = [](Range &r, const std::vector<double> &g) {
        double step = g.size() > 1 ? (r.hi - r.lo) / static_cast<double>(g.size() - 1) : 1.0;
        r.finish();
        r.lo -= step / 2, r.hi += step / 2;
        return step;
    };
    double dx = pad(xr, map.x), dy = pad(yr, map.y);
    zr.finish();
    std::string out = frame(map.title, map.x_label, map.y_label, xr, yr);
    double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    // Blue-white-red ramp.
    auto color = [&](double v) {
        if (!std::isfinite(v)) {
            return std::string("#999999");
        }
        double u = std::clamp((v - zr.lo) / (zr.hi - zr.lo), 0.0, 1.0);
        int r = u < 0.5 ? static_cast<int>(510 * u) : 255;
        int b = u > 0.5 ? static_cast<int>(510 * (1 - u)) : 255;
        int g = std::min(r, b);
        return fmt::format("#{:02x}{:02x}{:02x}", r, g, b);
    };
    for (std::size_t iy = 0; iy < map.y.size(); ++iy) {
        for (std::size_t ix = 0; ix < map.x.size(); ++ix) {
            double px = xr.map(map.x[ix] - dx / 2, x0, x1), pw = xr.map(map.x[ix] + dx / 2, x0, x1) - px;
            double py = yr.map(map.y[iy] + dy / 2, y0, y1), ph = yr.map(map.y[iy] - dy / 2, y0, y1) - py;
            out += fmt::format(
                "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                px, py, pw + 0.3, ph + 0.3, color(map.values[iy][ix]));
        }
    }
    // Colour bar.
    for (int i = 0; i < 50; ++i) {
        double v = zr.lo + (i + 0.5) * (zr.hi - zr.lo) / 50;
        double py = y0 - (i + 1) * (y0 - y1) / 50;
        out += fmt::format(
            "<rect x=\"{}\" y=\"{:.2f}\" width=\"16\" height=\"{:.2f}\" fill=\"{}\"/>\n", x1 + 20, py, (y0 - y1) / 50 + 0.3, color(v));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", x1 + 40, y1 + 10, tick(zr.hi));
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", x1 + 40, y0, tick(zr.lo));
    return out + "</svg>\n";
}

void write_file(const std::string &dir, const std::string &name, const std::string &contents) {
    std::filesystem::create_directories(dir);
    auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents)) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

}  // namespace fluxlab::cli
