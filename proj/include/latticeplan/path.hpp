#ifndef LATTICEPLAN_PATH_HPP
#define LATTICEPLAN_PATH_HPP

#include "latticeplan/tuple.hpp"

#include <string>
#include <vector>

namespace latticeplan {

struct GridPoint {
    int x = 0;
    int y = 0;

    auto operator<=>(const GridPoint&) const = default;
};

enum class DiagonalSide {
    Above, ///< y >= x at every node
    Below, ///< x >= y at every node (coordinate swap of Above)
};

/// Monotone lattice path on an n x n node grid, stored as the origin plus
/// one column-top node per tuple entry:
///   (0,0), (0,Y_1), (1,Y_2), ..., (n-1,Y_n)   with Y_i = t_1 + ... + t_i.
/// For the below-diagonal side x and y are swapped throughout.
struct LatticePath {
    std::vector<GridPoint> nodes;
    DiagonalSide side = DiagonalSide::Above;

    /// Node count n of the generating tuple (nodes.size() - 1).
    int order() const { return static_cast<int>(nodes.size()) - 1; }

    bool operator==(const LatticePath&) const = default;
};

LatticePath tuple_to_path(const TreeTuple& t, DiagonalSide side);

/// Recovers the entries as relative column heights t_i = Y_i - Y_{i-1}.
/// Rejects node lists that do not satisfy the path invariants for the
/// declared side (throws std::invalid_argument).
TreeTuple path_to_tuple(const LatticePath& p);

/// JSON array of [x, y] pairs, e.g. [[0,0],[0,1],[1,1]].
std::string path_to_json(const LatticePath& p);

/// Parses the array form; the side is inferred from the first step.
LatticePath path_from_json(const std::string& text);

} // namespace latticeplan

#endif
