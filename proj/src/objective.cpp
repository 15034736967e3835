#include "latticeplan/objective.hpp"

#include <cmath>

namespace latticeplan {

double path_length(const LatticePath& path)
{
    double total = 0.0;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        const double dx = path.nodes[i].x - path.nodes[i - 1].x;
        const double dy = path.nodes[i].y - path.nodes[i - 1].y;
        total += std::hypot(dx, dy);
    }
    return total;
}

PathObjective::PathObjective(const OccupancyGrid& grid, SamplerConfig sampler_config,
    int max_evals, std::uint64_t seed, double penalty)
    : grid_(grid)
    , sampler_config_(sampler_config)
    , budget_(max_evals)
    , rng_(seed)
    , penalty_(penalty > 0.0 ? penalty : 10.0 * grid.size())
{
    history_.reserve(static_cast<std::size_t>(max_evals > 0 ? max_evals : 0));
}

std::optional<double> PathObjective::evaluate(double alpha)
{
    if (budget_.exhausted())
        return std::nullopt;
    budget_.consume();

    SamplerConfig config = sampler_config_;
    config.alpha = alpha;
    const std::optional<LatticePath> path = generate_path(grid_, config, rng_);

    double fitness = penalty_;
    if (path) {
        fitness = path_length(*path);
        const bool improves = !incumbent_ || fitness < incumbent_->length;
        if (improves && path_collision_free(grid_, *path))
            incumbent_ = Incumbent { alpha, fitness, path_to_tuple(*path), *path };
    }
    history_.push_back(Evaluation { alpha, fitness });
    return fitness;
}

} // namespace latticeplan
