#include "latticeplan/svg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace latticeplan {

std::string render_svg(const OccupancyGrid& grid,
    std::span<const LatticePath> paths, const RenderSpec& spec)
{
    if (spec.cell_px < 2 || spec.cell_px % 2 != 0)
        throw std::invalid_argument("render_svg: cell_px must be a positive even number");

    const int n = grid.size();
    const int cell = spec.cell_px;
    const int extent = n * cell;
    const auto px = [cell](int x) { return x * cell + cell / 2; };
    const auto py = [cell, n](int y) { return (n - 1 - y) * cell + cell / 2; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << extent << "\" height=\"" << extent << "\" "
        << "viewBox=\"0 0 " << extent << " " << extent << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << extent << "\" height=\"" << extent
        << "\" fill=\"" << spec.background << "\"/>\n";

    // Occupied nodes, merged into one rect per horizontal run.
    for (int y = 0; y < n; ++y) {
        int x = 0;
        while (x < n) {
            if (!grid.occupied(x, y)) {
                ++x;
                continue;
            }
            int run = x;
            while (run < n && grid.occupied(run, y))
                ++run;
            svg << "  <rect x=\"" << x * cell << "\" y=\"" << (n - 1 - y) * cell
                << "\" width=\"" << (run - x) * cell << "\" height=\"" << cell
                << "\" fill=\"" << spec.obstacle_fill << "\"/>\n";
            x = run;
        }
    }

    char opacity[32];
    std::snprintf(opacity, sizeof(opacity), "%.3g", spec.path_opacity);
    char width[32];
    std::snprintf(width, sizeof(width), "%.3g", spec.stroke_width);

    for (std::size_t i = 0; i < paths.size(); ++i) {
        const std::string& color = spec.path_palette[i % spec.path_palette.size()];
        svg << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"" << width
            << "\" stroke-opacity=\"" << opacity
            << "\" stroke-linejoin=\"round\" stroke-linecap=\"round\" points=\"";
        bool first = true;
        for (const GridPoint& node : paths[i].nodes) {
            if (!first)
                svg << ' ';
            svg << px(node.x) << ',' << py(node.y);
            first = false;
        }
        svg << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace latticeplan
