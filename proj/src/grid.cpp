#include "latticeplan/grid.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace latticeplan {

OccupancyGrid::OccupancyGrid(int n, std::string name)
    : n_(n)
    , name_(std::move(name))
{
    if (n < 2)
        throw std::invalid_argument("OccupancyGrid: side length must be at least 2");
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void OccupancyGrid::set_occupied(int x, int y, bool value)
{
    if (x < 0 || y < 0 || x >= n_ || y >= n_)
        return;
    if (value && ((x == 0 && y == 0) || (x == n_ - 1 && y == n_ - 1)))
        return; // origin and destination stay free
    cells_[index(x, y)] = value ? 1 : 0;
}

bool OccupancyGrid::column_clear(int x, int y_from, int y_to) const
{
    for (int y = y_from; y <= y_to; ++y)
        if (occupied(x, y))
            return false;
    return true;
}

bool OccupancyGrid::row_clear(int y, int x_from, int x_to) const
{
    for (int x = x_from; x <= x_to; ++x)
        if (occupied(x, y))
            return false;
    return true;
}

OccupancyGrid load_map(const std::string& text, std::string name)
{
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos)
            nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (!lines.empty() && lines.back().empty())
        lines.pop_back(); // trailing newline
    const int n = static_cast<int>(lines.size());
    if (n < 2)
        throw MapFormatError("map must have at least 2 rows");

    OccupancyGrid grid(n, std::move(name));
    for (int row = 0; row < n; ++row) {
        const std::string& line = lines[static_cast<std::size_t>(row)];
        if (static_cast<int>(line.size()) != n)
            throw MapFormatError("ragged map: row " + std::to_string(row) + " has "
                + std::to_string(line.size()) + " columns, expected " + std::to_string(n));
        const int y = n - 1 - row; // row 0 of the file is the top of the grid
        for (int x = 0; x < n; ++x) {
            const char c = line[static_cast<std::size_t>(x)];
            if (c == '.')
                continue;
            if (c != '#')
                throw MapFormatError(std::string("illegal map character '") + c + "'");
            if (x == 0 && y == 0)
                throw MapFormatError("origin (0,0) must be free");
            if (x == n - 1 && y == n - 1)
                throw MapFormatError("destination (n-1,n-1) must be free");
            grid.set_occupied(x, y);
        }
    }
    return grid;
}

std::string save_map(const OccupancyGrid& grid)
{
    const int n = grid.size();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
    for (int y = n - 1; y >= 0; --y) {
        for (int x = 0; x < n; ++x)
            out.push_back(grid.occupied(x, y) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

OccupancyGrid load_map_file(const std::string& filename)
{
    std::ifstream in(filename, std::ios::binary);
    if (!in)
        throw MapFormatError("cannot open map file '" + filename + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_map(buffer.str(), std::filesystem::path(filename).stem().string());
}

void save_map_file(const OccupancyGrid& grid, const std::string& filename)
{
    std::ofstream out(filename, std::ios::binary);
    if (!out)
        throw MapFormatError("cannot open '" + filename + "' for writing");
    out << save_map(grid);
}

} // namespace latticeplan
