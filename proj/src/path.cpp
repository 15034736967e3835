#include "latticeplan/path.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace latticeplan {

namespace {

    GridPoint oriented(int x, int y, DiagonalSide side)
    {
        return side == DiagonalSide::Above ? GridPoint { x, y } : GridPoint { y, x };
    }

} // namespace

LatticePath tuple_to_path(const TreeTuple& t, DiagonalSide side)
{
    require_valid(t);
    const int n = t.size();

    LatticePath path;
    path.side = side;
    path.nodes.reserve(static_cast<std::size_t>(n) + 1);
    path.nodes.push_back(oriented(0, 0, side));
    int height = 0;
    for (int i = 1; i <= n; ++i) {
        height += t.at(i - 1);
        path.nodes.push_back(oriented(i - 1, height, side));
    }
    return path;
}

TreeTuple path_to_tuple(const LatticePath& p)
{
    const int n = p.order();
    if (n < 1 || p.nodes.front() != GridPoint { 0, 0 })
        throw std::invalid_argument("path_to_tuple: path must start at (0,0)");

    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    int height = 0;
    for (int i = 1; i <= n; ++i) {
        const GridPoint raw = p.nodes[static_cast<std::size_t>(i)];
        const GridPoint node = p.side == DiagonalSide::Above ? raw : GridPoint { raw.y, raw.x };
        if (node.x != i - 1)
            throw std::invalid_argument("path_to_tuple: node columns must advance one step at a time");
        if (node.y < height)
            throw std::invalid_argument("path_to_tuple: column heights must be non-decreasing");
        entries.push_back(node.y - height);
        height = node.y;
    }
    TreeTuple t(std::move(entries));
    require_valid(t); // catches off-diagonal-side and short paths
    return t;
}

std::string path_to_json(const LatticePath& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const GridPoint& node : p.nodes)
        arr.push_back({ node.x, node.y });
    return arr.dump();
}

LatticePath path_from_json(const std::string& text)
{
    const nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array() || arr.size() < 2)
        throw std::invalid_argument("path_from_json: expected an array of at least two [x,y] pairs");

    LatticePath path;
    path.nodes.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("path_from_json: each node must be an [x,y] pair");
        path.nodes.push_back(GridPoint { item[0].get<int>(), item[1].get<int>() });
    }
    // The first step leaves (0,0) vertically for above-diagonal paths and
    // horizontally for below-diagonal ones.
    const GridPoint first = path.nodes[1];
    path.side = first.x == 0 ? DiagonalSide::Above : DiagonalSide::Below;
    path_to_tuple(path); // validate
    return path;
}

} // namespace latticeplan
