#include "latticeplan/sampler.hpp"

namespace latticeplan {

namespace {

    // Logical coordinates are always above-diagonal (column, height); the
    // below side only swaps the grid lookup.
    bool probe(const OccupancyGrid& grid, DiagonalSide side, int column, int y)
    {
        return side == DiagonalSide::Above ? grid.occupied(column, y)
                                           : grid.occupied(y, column);
    }

    bool rise_clear(const OccupancyGrid& grid, DiagonalSide side, int column,
        int y_from, int y_to)
    {
        return side == DiagonalSide::Above ? grid.column_clear(column, y_from, y_to)
                                           : grid.row_clear(column, y_from, y_to);
    }

} // namespace

std::optional<TreeTuple> generate_tuple(const OccupancyGrid& grid,
    const SamplerConfig& config, RandomSource& rng)
{
    const int n = grid.size();
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));

    Bounds bounds = initial_bounds(n);
    int height = 0; // Y_{i-1}
    for (int i = 1; i <= n - 1; ++i) {
        const double r = rng.next_uniform();
        const double lambda = lambda_of(i, n, config.alpha, r);
        const int t = quantize(bounds.lower, bounds.upper, lambda);

        const int column = i - 1;
        const int top = height + t;
        const bool blocked = config.strict_collision
            ? !rise_clear(grid, config.side, column, height, top)
            : probe(grid, config.side, column, top);
        if (blocked)
            return std::nullopt;

        entries.push_back(t);
        bounds = next_bounds(t, bounds.slack, bounds.upper);
        height = top;
    }
    entries.push_back(0);
    // The final node is the destination, which the grid keeps free.
    return TreeTuple(std::move(entries));
}

std::optional<LatticePath> generate_path(const OccupancyGrid& grid,
    const SamplerConfig& config, RandomSource& rng)
{
    const std::optional<TreeTuple> tuple = generate_tuple(grid, config, rng);
    if (!tuple)
        return std::nullopt;
    return tuple_to_path(*tuple, config.side);
}

bool path_collision_free(const OccupancyGrid& grid, const LatticePath& path)
{
    const TreeTuple tuple = path_to_tuple(path);
    const int n = tuple.size();
    int height = 0;
    for (int i = 1; i <= n; ++i) {
        const int top = height + tuple.at(i - 1);
        if (!rise_clear(grid, path.side, i - 1, height, top))
            return false;
        height = top;
    }
    return true;
}

BothSides generate_both_sides(const OccupancyGrid& grid, double alpha_above,
    double alpha_below, std::uint64_t root_seed, bool strict_collision)
{
    RandomStream above_rng(derive_seed(root_seed, 0));
    RandomStream below_rng(derive_seed(root_seed, 1));

    SamplerConfig above { alpha_above, DiagonalSide::Above, strict_collision };
    SamplerConfig below { alpha_below, DiagonalSide::Below, strict_collision };

    BothSides result;
    result.above = generate_path(grid, above, above_rng);
    result.below = generate_path(grid, below, below_rng);
    return result;
}

} // namespace latticeplan
