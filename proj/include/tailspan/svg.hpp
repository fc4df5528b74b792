#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tailspan::svg {

/// Minimal static SVG line chart with optional highlighted points.
/// All coordinates are emitted with fixed precision so output is
/// byte-deterministic.
struct ChartSpec {
    std::string title;
    std::size_t width = 880;
    std::size_t height = 320;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::size_t> highlighted;  // indices into x/y
};

std::string render_chart(const ChartSpec& spec);

}  // namespace tailspan::svg
