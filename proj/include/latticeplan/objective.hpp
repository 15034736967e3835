#ifndef LATTICEPLAN_OBJECTIVE_HPP
#define LATTICEPLAN_OBJECTIVE_HPP

#include "latticeplan/sampler.hpp"

#include <optional>
#include <vector>

namespace latticeplan {

/// Polyline arc length of the path through its node sequence, in cell
/// units: the initial rise contributes t_1, every later segment
/// sqrt(1 + t_i^2). Bounded by [2 + (n-2)*sqrt(2), 2(n-1)] over valid
/// n-node paths (staircase and L-shape respectively).
double path_length(const LatticePath& path);

class EvaluationBudget {
public:
    explicit EvaluationBudget(int max_evals)
        : max_evals_(max_evals)
    {
    }

    int max_evals() const { return max_evals_; }
    int used() const { return used_; }
    int remaining() const { return max_evals_ - used_; }
    bool exhausted() const { return used_ >= max_evals_; }
    void consume() { ++used_; }

private:
    int max_evals_ = 0;
    int used_ = 0;
};

struct Incumbent {
    double alpha = 0.0;
    double length = 0.0;
    TreeTuple tuple;
    LatticePath path;
};

/// Scalar fitness for the curvature parameter: each query samples one path
/// on the grid with a fresh stretch of the run's random stream and returns
/// its length, or the penalty when generation hits an obstacle. The
/// objective is deliberately noisy; the artifact of a run is the best
/// feasible path seen, which is re-checked against the full polyline before
/// being retained.
class PathObjective {
public:
    /// penalty <= 0 selects the default 10*n, which exceeds the 2(n-1)
    /// feasible maximum with wide margin.
    PathObjective(const OccupancyGrid& grid, SamplerConfig sampler_config,
        int max_evals, std::uint64_t seed, double penalty = 0.0);

    /// One fitness query; consumes one unit of budget. Empty once the
    /// budget is exhausted (distinct from any fitness value).
    std::optional<double> evaluate(double alpha);

    const OccupancyGrid& grid() const { return grid_; }
    double penalty() const { return penalty_; }
    const EvaluationBudget& budget() const { return budget_; }
    const std::optional<Incumbent>& incumbent() const { return incumbent_; }

    struct Evaluation {
        double alpha = 0.0;
        double fitness = 0.0;
    };

    /// Every evaluation so far, in call order.
    const std::vector<Evaluation>& history() const { return history_; }

private:
    const OccupancyGrid& grid_;
    SamplerConfig sampler_config_;
    EvaluationBudget budget_;
    RandomStream rng_;
    double penalty_ = 0.0;
    std::optional<Incumbent> incumbent_;
    std::vector<Evaluation> history_;
};

} // namespace latticeplan

#endif
