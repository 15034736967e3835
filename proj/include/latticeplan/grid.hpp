#ifndef LATTICEPLAN_GRID_HPP
#define LATTICEPLAN_GRID_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latticeplan {

struct MapFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square boolean occupancy field over n x n grid nodes. The origin (0,0)
/// and the destination (n-1,n-1) are kept free unconditionally; attempts to
/// occupy them are ignored. Immutable once built, safe to share across
/// threads.
class OccupancyGrid {
public:
    explicit OccupancyGrid(int n, std::string name = "");

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Out-of-range coordinates read as occupied.
    bool occupied(int x, int y) const
    {
        if (x < 0 || y < 0 || x >= n_ || y >= n_)
            return true;
        return cells_[index(x, y)] != 0;
    }

    void set_occupied(int x, int y, bool value = true);

    /// True iff every node (x, y), y_from <= y <= y_to, is free. An inverted
    /// range is empty and reads as clear.
    bool column_clear(int x, int y_from, int y_to) const;

    /// Row-wise counterpart, used for below-diagonal collision checks.
    bool row_clear(int y, int x_from, int x_to) const;

    bool operator==(const OccupancyGrid&) const = default;

private:
    std::size_t index(int x, int y) const
    {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
    }

    int n_ = 0;
    std::string name_;
    std::vector<std::uint8_t> cells_;
};

/// Text map format: n lines of n characters, '.' free and '#' occupied.
/// Line 0 of the text is the top of the grid (y = n-1); the last line holds
/// the origin row. load and save are byte-exact inverses.
OccupancyGrid load_map(const std::string& text, std::string name = "");
std::string save_map(const OccupancyGrid& grid);

OccupancyGrid load_map_file(const std::string& filename);
void save_map_file(const OccupancyGrid& grid, const std::string& filename);

} // namespace latticeplan

#endif
