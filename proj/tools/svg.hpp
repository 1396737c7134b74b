// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_TOOLS_SVG_HPP
#define FAPCHAN_TOOLS_SVG_HPP

#include <string>
#include <vector>

namespace fapchan::svg {

// One polyline; dash is an SVG stroke-dasharray ("" = solid).
struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#1f77b4";
    std::string dash;
};

// Minimal static SVG 1.1 line plot: linear or log axes, decade/nice-number
// ticks, a legend, and optional vertical reference lines (used for critical
// scales).  Output is deterministic byte-for-byte.
struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
    std::vector<double> x_markers;

    std::string render(int width = 860, int height = 540) const;
};

void write_file(const std::string& path, const Plot& plot);

} // namespace fapchan::svg

#endif // FAPCHAN_TOOLS_SVG_HPP
