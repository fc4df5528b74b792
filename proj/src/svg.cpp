#include "tailspan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tailspan::svg {

namespace {

constexpr double kMarginLeft = 56.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 36.0;

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_chart(const ChartSpec& spec) {
    if (spec.x.size() != spec.y.size() || spec.x.empty()) {
        throw std::invalid_argument(
            "render_chart: x and y must be nonempty and equal length");
    }
    const double w = static_cast<double>(spec.width);
    const double h = static_cast<double>(spec.height);
    const double plot_w = w - kMarginLeft - kMarginRight;
    const double plot_h = h - kMarginTop - kMarginBottom;

    double x_min = spec.x.front(), x_max = spec.x.front();
    double y_min = spec.y.front(), y_max = spec.y.front();
    for (double v : spec.x) {
        x_min = std::min(x_min, v);
        x_max = std::max(x_max, v);
    }
    for (double v : spec.y) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const auto px = [&](double v) {
        return kMarginLeft + (v - x_min) / (x_max - x_min) * plot_w;
    };
    const auto py = [&](double v) {
        return kMarginTop + (y_max - v) / (y_max - y_min) * plot_h;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fixed(w / 2) + "\" y=\"18\" font-family=\"sans-serif\""
           " font-size=\"13\" text-anchor=\"middle\">" +
           escape(spec.title) + "</text>\n";

    // axes
    out += "<line x1=\"" + fixed(kMarginLeft) + "\" y1=\"" +
           fixed(kMarginTop) + "\" x2=\"" + fixed(kMarginLeft) + "\" y2=\"" +
           fixed(h - kMarginBottom) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + fixed(kMarginLeft) + "\" y1=\"" +
           fixed(h - kMarginBottom) + "\" x2=\"" + fixed(w - kMarginRight) +
           "\" y2=\"" + fixed(h - kMarginBottom) +
           "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    // ticks
    for (int t = 0; t <= 4; ++t) {
        const double fx = x_min + (x_max - x_min) * t / 4.0;
        const double fy = y_min + (y_max - y_min) * t / 4.0;
        out += "<text x=\"" + fixed(px(fx)) + "\" y=\"" +
               fixed(h - kMarginBottom + 16.0) +
               "\" font-family=\"sans-serif\" font-size=\"10\""
               " text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
        out += "<text x=\"" + fixed(kMarginLeft - 6.0) + "\" y=\"" +
               fixed(py(fy) + 3.0) +
               "\" font-family=\"sans-serif\" font-size=\"10\""
               " text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
    }

    out += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1\""
           " points=\"";
    for (std::size_t i = 0; i < spec.x.size(); ++i) {
        if (i > 0) out += ' ';
        out += fixed(px(spec.x[i])) + "," + fixed(py(spec.y[i]));
    }
    out += "\"/>\n";

    for (std::size_t idx : spec.highlighted) {
        if (idx >= spec.x.size()) {
            throw std::invalid_argument(
                "render_chart: highlighted index out of range");
        }
        out += "<circle cx=\"" + fixed(px(spec.x[idx])) + "\" cy=\"" +
               fixed(py(spec.y[idx])) +
               "\" r=\"2.5\" fill=\"#cc2222\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tailspan::svg
