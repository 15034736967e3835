#ifndef LATTICEPLAN_OPTIMIZER_HPP
#define LATTICEPLAN_OPTIMIZER_HPP

#include "latticeplan/objective.hpp"
#include "latticeplan/random.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latticeplan {

enum class OptimizerKind {
    Pso, ///< particle swarm, inertia + cognitive/social pulls
    DeBest, ///< DE/best/1/bin
    DeRand, ///< DE/rand/1/bin
    Sade, ///< strategy-adaptation DE (four-strategy pool)
    Rbde, ///< DE with rank-biased donor selection
};

const char* to_string(OptimizerKind kind);
OptimizerKind optimizer_kind_from_string(const std::string& s);
std::vector<OptimizerKind> all_optimizer_kinds();

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Pso;
    int population = 10;

    // PSO
    double omega = 0.7;
    double c1 = 2.05;
    double c2 = 2.05;

    // DE family
    double cr = 0.5;
    double weight_f = 0.7;

    // RBDE rank bias
    double beta = 2.0;

    // SADE adaptation
    int sade_learning_period = 50;
    double sade_f_mean = 0.5;
    double sade_f_scale = 0.3;
    double sade_cr_scale = 0.1;

    // Search box for the curvature parameter. The theoretical range is
    // unbounded above, but at n = 50 anything past 10 is already pinned to
    // the diagonal, so the box default keeps the search informative.
    double alpha_min = 0.0;
    double alpha_max = 10.0;

    std::uint64_t seed = 0;

    double clamp(double alpha) const
    {
        return std::clamp(alpha, alpha_min, alpha_max);
    }
};

nlohmann::json optimizer_config_to_json(const OptimizerConfig& config);
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);

struct Individual {
    double position = 0.0;
    double fitness = 0.0;
};

// --- building blocks, exposed for direct testing ---------------------------

/// v' = omega*v + c1*r1*(pbest - x) + c2*r2*(gbest - x)
double pso_velocity(double v, double x, double pbest, double gbest,
    double omega, double c1, double c2, double r1, double r2);

/// DE/rand/1 and DE/best/1 mutants. Donor indices are drawn mutually
/// distinct and distinct from the target; the result is clamped to the box.
double de_mutate_rand(std::span<const Individual> population, int target,
    double f, const OptimizerConfig& config, RandomSource& rng);
double de_mutate_best(std::span<const Individual> population, int target,
    int best, double f, const OptimizerConfig& config, RandomSource& rng);

/// Binomial crossover plus greedy selection, specialized to one dimension:
/// the forced crossover dimension is the only dimension, so the trial is
/// the mutant regardless of CR. Consumes one evaluation; the trial replaces
/// the target when its fitness is no worse (ties go to the trial). Returns
/// whether the trial survived.
bool de_crossover_select(Individual& target, double mutant, PathObjective& objective);

/// Whitley linear-bias rank transform: u in [0,1) maps to a rank index in
/// [0, population_size), denser near 0 (better ranks) for beta > 1.
int whitley_index(int population_size, double beta, double u);

/// Three distinct rank indices != exclude_rank, each drawn through the
/// Whitley transform.
std::array<int, 3> rbde_select_indices(int population_size, int exclude_rank,
    double beta, RandomSource& rng);

/// Success-history bookkeeping for SADE: per-strategy selection
/// probabilities and crossover-rate means, recomputed once per learning
/// period from recorded trial outcomes.
class SadeState {
public:
    static constexpr int kStrategies = 4; // rand/1/bin, rand-to-best/2/bin,
                                          // rand/2/bin, current-to-rand/1

    explicit SadeState(int learning_period, double cr_scale = 0.1);

    const std::array<double, kStrategies>& probabilities() const { return probabilities_; }
    double crm(int strategy) const { return crm_[static_cast<std::size_t>(strategy)]; }

    int sample_strategy(RandomSource& rng) const;

    /// N(crm_k, cr_scale), redrawn until it lands in [0, 1].
    double sample_cr(int strategy, RandomSource& rng) const;

    /// cr < 0 marks a strategy without crossover (kept out of the CR memory).
    void record_trial(int strategy, bool success, double cr);

    /// Advances the generation counter; at each learning-period boundary the
    /// probabilities are recomputed from the period's success rates and the
    /// per-strategy CR means from the successful CR values. A period with no
    /// recorded trials leaves everything unchanged.
    void end_generation();

private:
    int learning_period_ = 50;
    double cr_scale_ = 0.1;
    int generations_ = 0;
    std::array<double, kStrategies> probabilities_ {};
    std::array<double, kStrategies> crm_ {};
    std::array<int, kStrategies> successes_ {};
    std::array<int, kStrategies> failures_ {};
    std::array<std::vector<double>, kStrategies> success_crs_;
};

// --- driver -----------------------------------------------------------------

struct OptimizeResult {
    double best_alpha = 0.0;
    double best_fitness = 0.0;
    std::optional<Incumbent> incumbent;
    /// Best-so-far fitness after each evaluation; length = evaluations used.
    std::vector<double> trace;
};

/// Runs the configured heuristic against a fresh objective until the budget
/// cannot fund another whole generation. Fully deterministic in
/// (kind, config, seed, grid).
OptimizeResult optimize(const OptimizerConfig& config, PathObjective& objective);

} // namespace latticeplan

#endif
