// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "fapchan/format.hpp"

namespace fapchan::svg {

namespace {

// Pixel coordinates with two decimals: deterministic and compact.
std::string px(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;

    double place(double v) const
    {
        const double t = log ? std::log10(v) : v;
        return (t - lo) / (hi - lo);
    }
};

bool usable(double v, bool log_axis)
{
    return std::isfinite(v) && (!log_axis || v > 0.0);
}

// Round a raw step to 1, 2 or 5 times a power of ten.
double nice_step(double raw)
{
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    if (frac <= 1.0) return mag;
    if (frac <= 2.0) return 2.0 * mag;
    if (frac <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

std::vector<double> ticks(const Axis& ax)
{
    std::vector<double> out;
    if (ax.log) {
        for (double k = std::ceil(ax.lo - 1e-9); k <= ax.hi + 1e-9; k += 1.0)
            out.push_back(k);
        if (out.size() < 2)
            out = {ax.lo, ax.hi};
        return out;
    }
    const double step = nice_step((ax.hi - ax.lo) / 5.0);
    for (double t = std::ceil(ax.lo / step) * step; t <= ax.hi + 0.5 * step; t += step)
        out.push_back(t);
    if (out.size() < 2)
        out = {ax.lo, ax.hi};
    return out;
}

std::string tick_label(double t, bool log_axis)
{
    return compact(log_axis ? std::pow(10.0, t) : t);
}

void fit(Axis& ax, double v)
{
    const double t = ax.log ? std::log10(v) : v;
    ax.lo = std::min(ax.lo, t);
    ax.hi = std::max(ax.hi, t);
}

} // namespace

std::string Plot::render(int width, int height) const
{
    const double ml = 72, mr = 24, mt = 40, mb = 52; // margins
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    Axis xa{std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), log_x};
    Axis ya{std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), log_y};
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            if (usable(s.x[i], log_x) && usable(s.y[i], log_y)) {
                fit(xa, s.x[i]);
                fit(ya, s.y[i]);
            }
    if (!(xa.lo < xa.hi)) { xa.lo -= 0.5; xa.hi += 0.5; }
    if (!(ya.lo < ya.hi)) { ya.lo -= 0.5; ya.hi += 0.5; }
    if (!std::isfinite(xa.lo) || !std::isfinite(ya.lo))
        throw std::domain_error("svg: no plottable data points");
    // A little headroom on the value axis.
    const double pad = 0.05 * (ya.hi - ya.lo);
    ya.lo -= pad;
    ya.hi += pad;

    auto X = [&](double v) { return ml + pw * xa.place(v); };
    auto Y = [&](double v) { return mt + ph * (1.0 - ya.place(v)); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
         + std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + px(ml) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">"
         + title + "</text>\n";

    // Axes box and ticks.
    out += "<rect x=\"" + px(ml) + "\" y=\"" + px(mt) + "\" width=\"" + px(pw)
         + "\" height=\"" + px(ph) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
    for (double t : ticks(xa)) {
        const double gx = ml + pw * (t - xa.lo) / (xa.hi - xa.lo);
        out += "<line x1=\"" + px(gx) + "\" y1=\"" + px(mt) + "\" x2=\"" + px(gx)
             + "\" y2=\"" + px(mt + ph) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + px(gx) + "\" y=\"" + px(mt + ph + 18)
             + "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
             + tick_label(t, log_x) + "</text>\n";
    }
    for (double t : ticks(ya)) {
        const double gy = mt + ph * (1.0 - (t - ya.lo) / (ya.hi - ya.lo));
        out += "<line x1=\"" + px(ml) + "\" y1=\"" + px(gy) + "\" x2=\"" + px(ml + pw)
             + "\" y2=\"" + px(gy) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + px(ml - 6) + "\" y=\"" + px(gy + 4)
             + "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
             + tick_label(t, log_y) + "</text>\n";
    }
    out += "<text x=\"" + px(ml + pw / 2) + "\" y=\"" + px(height - 10.0)
         + "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
         + x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + px(mt + ph / 2)
         + "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 " + px(mt + ph / 2) + ")\">" + y_label + "</text>\n";

    // Vertical reference markers (critical scales).
    for (double m : x_markers) {
        if (!usable(m, log_x))
            continue;
        const double t = xa.place(m);
        if (t < 0.0 || t > 1.0)
            continue;
        const double gx = X(m);
        out += "<line x1=\"" + px(gx) + "\" y1=\"" + px(mt) + "\" x2=\"" + px(gx)
             + "\" y2=\"" + px(mt + ph) + "\" stroke=\"#999999\" stroke-dasharray=\"3,3\"/>\n";
        out += "<text x=\"" + px(gx + 4) + "\" y=\"" + px(mt + 14)
             + "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#666666\">n_c="
             + compact(m) + "</text>\n";
    }

    // Data polylines, split wherever a point is unusable on the chosen axes.
    for (const Series& s : series) {
        std::string points;
        auto flush = [&]() {
            if (!points.empty()) {
                out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.6\"";
                if (!s.dash.empty())
                    out += " stroke-dasharray=\"" + s.dash + "\"";
                out += " points=\"" + points + "\"/>\n";
                points.clear();
            }
        };
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!usable(s.x[i], log_x) || !usable(s.y[i], log_y)) {
                flush();
                continue;
            }
            if (!points.empty())
                points += ' ';
            points += px(X(s.x[i])) + ',' + px(Y(s.y[i]));
        }
        flush();
    }

    // Legend, top-right inside the axes box.
    double ly = mt + 16;
    for (const Series& s : series) {
        const double lx = ml + pw - 170;
        out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly - 4) + "\" x2=\"" + px(lx + 28)
             + "\" y2=\"" + px(ly - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.6\"";
        if (!s.dash.empty())
            out += " stroke-dasharray=\"" + s.dash + "\"";
        out += "/>\n";
        out += "<text x=\"" + px(lx + 34) + "\" y=\"" + px(ly)
             + "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
        ly += 18;
    }

    out += "</svg>\n";
    return out;
}

void write_file(const std::string& path, const Plot& plot)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("svg: cannot open output file " + path);
    const std::string doc = plot.render();
    f.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    if (!f)
        throw std::runtime_error("svg: failed writing " + path);
}

} // namespace fapchan::svg
