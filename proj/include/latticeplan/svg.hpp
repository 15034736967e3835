#ifndef LATTICEPLAN_SVG_HPP
#define LATTICEPLAN_SVG_HPP

#include "latticeplan/grid.hpp"
#include "latticeplan/path.hpp"

#include <span>
#include <string>
#include <vector>

namespace latticeplan {

/// Rendering parameters. cell_px must be a positive even number so node
/// centers land on integer pixel coordinates and path geometry round-trips
/// exactly out of the file.
struct RenderSpec {
    int cell_px = 10;
    std::string background = "#ffffff";
    std::string obstacle_fill = "#3a3a3a";
    std::vector<std::string> path_palette {
        "#d62828", "#1d6fb8", "#2a9d3f", "#b048c8", "#e07f20",
    };
    double path_opacity = 0.2; ///< per path; overlaid runs darken shared corridors
    double stroke_width = 2.0;
};

/// SVG 1.1 document: the grid drawn with its origin at the bottom-left,
/// occupied nodes as filled squares, each path as one semi-transparent
/// polyline through the node centers.
std::string render_svg(const OccupancyGrid& grid,
    std::span<const LatticePath> paths, const RenderSpec& spec = {});

} // namespace latticeplan

#endif
