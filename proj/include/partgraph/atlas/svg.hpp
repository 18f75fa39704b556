#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "partgraph/atlas/report.hpp"

namespace partgraph::atlas {

/// Static grayscale rendering of a heatmap grid in the (a, b)-plane: one
/// square per non-empty cell, darker for larger mean. a grows to the right,
/// b grows upward. Empty cells are left blank.
inline void write_heatmap_svg(std::ostream& os, const HeatmapGrid& grid, int cell_px = 12) {
    int max_x = 2;
    int max_y = 2;
    double max_mean = 0.0;
    for (const auto& [xy, c] : grid.cells) {
        max_x = std::max(max_x, xy.first);
        max_y = std::max(max_y, xy.second);
        max_mean = std::max(max_mean, c.mean());
    }
    const int margin = 2 * cell_px;
    const int width = (max_x + 2) * cell_px + 2 * margin;
    const int height = (max_y + 2) * cell_px + 2 * margin;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<title>" << to_string(grid.metric) << " by " << to_string(grid.positioning) << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& [xy, c] : grid.cells) {
        const double level = max_mean > 0 ? c.mean() / max_mean : 0.0;
        const int gray = 255 - static_cast<int>(level * 230.0 + 0.5);
        const int px = margin + xy.first * cell_px - cell_px / 2;
        const int py = height - margin - xy.second * cell_px - cell_px / 2;
        char fill[16];
        std::snprintf(fill, sizeof fill, "#%02x%02x%02x", gray, gray, gray);
        os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell_px << "\" height=\"" << cell_px
           << "\" fill=\"" << fill << "\" stroke=\"#999999\" stroke-width=\"0.5\"><title>a=" << half_integer(xy.first)
           << " b=" << half_integer(xy.second) << " edges=" << c.count << " mean="
           << Rational::of(c.sum, static_cast<std::int64_t>(c.count)).decimal() << "</title></rect>\n";
    }
    // a = b axis
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << margin + max_x * cell_px
       << "\" y2=\"" << height - margin - max_x * cell_px << "\" stroke=\"#cc3333\" stroke-dasharray=\"4 3\"/>\n";
    os << "</svg>\n";
}

} // namespace partgraph::atlas
