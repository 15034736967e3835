#ifndef LATTICEPLAN_SAMPLER_HPP
#define LATTICEPLAN_SAMPLER_HPP

#include "latticeplan/bounds.hpp"
#include "latticeplan/grid.hpp"
#include "latticeplan/path.hpp"
#include "latticeplan/random.hpp"

#include <cstdint>
#include <optional>

namespace latticeplan {

struct SamplerConfig {
    double alpha = 1.0; ///< curvature preference, >= 0
    DiagonalSide side = DiagonalSide::Above;
    /// Strict mode checks every node in each column rise (and the step into
    /// it); when false only the column-top node is probed, matching the
    /// original recursion's single occupancy lookup.
    bool strict_collision = true;
};

/// Stochastic collision-aware generation of a valid tuple on an n-node
/// grid. Entries 1..n-1 are drawn as t_i = quantize(L_i, U_i, lambda_i)
/// with lambda_i = r_i * (i/n)^alpha and a fresh uniform r_i per element;
/// the terminal entry is the forced zero. Each element's column is checked
/// against the grid as it is placed; an occupied node aborts the attempt.
/// Failure is a normal outcome (empty optional), not an error.
std::optional<TreeTuple> generate_tuple(const OccupancyGrid& grid,
    const SamplerConfig& config, RandomSource& rng);

/// generate_tuple composed with the path bijection.
std::optional<LatticePath> generate_path(const OccupancyGrid& grid,
    const SamplerConfig& config, RandomSource& rng);

/// Full-polyline collision check (strict semantics) of an existing path
/// against a grid: every node of every column rise and step must be free.
bool path_collision_free(const OccupancyGrid& grid, const LatticePath& path);

struct BothSides {
    std::optional<LatticePath> above;
    std::optional<LatticePath> below;
};

/// Two independent generations, one per side, on fixed substreams of the
/// root seed (index 0 above, index 1 below); the result does not depend on
/// which side runs first.
BothSides generate_both_sides(const OccupancyGrid& grid, double alpha_above,
    double alpha_below, std::uint64_t root_seed, bool strict_collision = true);

} // namespace latticeplan

#endif
