#include "latticeplan/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace latticeplan {

const char* to_string(OptimizerKind kind)
{
    switch (kind) {
    case OptimizerKind::Pso:
        return "pso";
    case OptimizerKind::DeBest:
        return "debest";
    case OptimizerKind::DeRand:
        return "derand";
    case OptimizerKind::Sade:
        return "sade";
    case OptimizerKind::Rbde:
        return "rbde";
    }
    return "pso";
}

OptimizerKind optimizer_kind_from_string(const std::string& s)
{
    if (s == "pso")
        return OptimizerKind::Pso;
    if (s == "debest")
        return OptimizerKind::DeBest;
    if (s == "derand")
        return OptimizerKind::DeRand;
    if (s == "sade")
        return OptimizerKind::Sade;
    if (s == "rbde")
        return OptimizerKind::Rbde;
    throw std::invalid_argument("unknown optimizer '" + s + "' (valid: pso, debest, derand, sade, rbde)");
}

std::vector<OptimizerKind> all_optimizer_kinds()
{
    return { OptimizerKind::Pso, OptimizerKind::DeBest, OptimizerKind::DeRand,
        OptimizerKind::Sade, OptimizerKind::Rbde };
}

nlohmann::json optimizer_config_to_json(const OptimizerConfig& config)
{
    return nlohmann::json {
        { "kind", to_string(config.kind) },
        { "population", config.population },
        { "omega", config.omega },
        { "c1", config.c1 },
        { "c2", config.c2 },
        { "cr", config.cr },
        { "f", config.weight_f },
        { "beta", config.beta },
        { "sade_learning_period", config.sade_learning_period },
        { "sade_f_mean", config.sade_f_mean },
        { "sade_f_scale", config.sade_f_scale },
        { "sade_cr_scale", config.sade_cr_scale },
        { "alpha_min", config.alpha_min },
        { "alpha_max", config.alpha_max },
        { "seed", config.seed },
    };
}

OptimizerConfig optimizer_config_from_json(const nlohmann::json& j)
{
    OptimizerConfig config;
    config.kind = optimizer_kind_from_string(j.value("kind", std::string { "pso" }));
    config.population = j.value("population", config.population);
    config.omega = j.value("omega", config.omega);
    config.c1 = j.value("c1", config.c1);
    config.c2 = j.value("c2", config.c2);
    config.cr = j.value("cr", config.cr);
    config.weight_f = j.value("f", config.weight_f);
    config.beta = j.value("beta", config.beta);
    config.sade_learning_period = j.value("sade_learning_period", config.sade_learning_period);
    config.sade_f_mean = j.value("sade_f_mean", config.sade_f_mean);
    config.sade_f_scale = j.value("sade_f_scale", config.sade_f_scale);
    config.sade_cr_scale = j.value("sade_cr_scale", config.sade_cr_scale);
    config.alpha_min = j.value("alpha_min", config.alpha_min);
    config.alpha_max = j.value("alpha_max", config.alpha_max);
    config.seed = j.value("seed", config.seed);
    if (config.population < 4)
        throw std::invalid_argument("population must be at least 4");
    if (config.alpha_min >= config.alpha_max)
        throw std::invalid_argument("alpha_min must be below alpha_max");
    return config;
}

// --- building blocks --------------------------------------------------------

double pso_velocity(double v, double x, double pbest, double gbest,
    double omega, double c1, double c2, double r1, double r2)
{
    return omega * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x);
}

namespace {

    /// `count` mutually distinct indices in [0, population_size), all
    /// distinct from `exclude`.
    void draw_distinct(int population_size, int exclude, RandomSource& rng,
        std::span<int> out)
    {
        for (std::size_t k = 0; k < out.size(); ++k) {
            int candidate = 0;
            bool fresh = false;
            while (!fresh) {
                candidate = rng.next_below(population_size);
                fresh = candidate != exclude;
                for (std::size_t j = 0; fresh && j < k; ++j)
                    fresh = candidate != out[j];
            }
            out[k] = candidate;
        }
    }

} // namespace

double de_mutate_rand(std::span<const Individual> population, int target,
    double f, const OptimizerConfig& config, RandomSource& rng)
{
    int r[3];
    draw_distinct(static_cast<int>(population.size()), target, rng, r);
    const double v = population[r[0]].position
        + f * (population[r[1]].position - population[r[2]].position);
    return config.clamp(v);
}

double de_mutate_best(std::span<const Individual> population, int target,
    int best, double f, const OptimizerConfig& config, RandomSource& rng)
{
    int r[2];
    draw_distinct(static_cast<int>(population.size()), target, rng, r);
    const double v = population[best].position
        + f * (population[r[0]].position - population[r[1]].position);
    return config.clamp(v);
}

bool de_crossover_select(Individual& target, double mutant, PathObjective& objective)
{
    const std::optional<double> fitness = objective.evaluate(mutant);
    if (!fitness)
        return false; // budget exhausted; caller stops the run
    if (*fitness <= target.fitness) {
        target.position = mutant;
        target.fitness = *fitness;
        return true;
    }
    return false;
}

int whitley_index(int population_size, double beta, double u)
{
    const double n = population_size;
    const double value = n / (2.0 * (beta - 1.0))
        * (beta - std::sqrt(beta * beta - 4.0 * (beta - 1.0) * u));
    const int index = static_cast<int>(std::floor(value));
    return std::clamp(index, 0, population_size - 1);
}

std::array<int, 3> rbde_select_indices(int population_size, int exclude_rank,
    double beta, RandomSource& rng)
{
    std::array<int, 3> out {};
    for (std::size_t k = 0; k < out.size(); ++k) {
        int candidate = 0;
        bool fresh = false;
        while (!fresh) {
            candidate = whitley_index(population_size, beta, rng.next_uniform());
            fresh = candidate != exclude_rank;
            for (std::size_t j = 0; fresh && j < k; ++j)
                fresh = candidate != out[j];
        }
        out[k] = candidate;
    }
    return out;
}

// --- SADE adaptation state ---------------------------------------------------

SadeState::SadeState(int learning_period, double cr_scale)
    : learning_period_(learning_period)
    , cr_scale_(cr_scale)
{
    probabilities_.fill(1.0 / kStrategies);
    crm_.fill(0.5);
}

int SadeState::sample_strategy(RandomSource& rng) const
{
    const double u = rng.next_uniform();
    double cumulative = 0.0;
    for (int k = 0; k < kStrategies; ++k) {
        cumulative += probabilities_[static_cast<std::size_t>(k)];
        if (u < cumulative)
            return k;
    }
    return kStrategies - 1;
}

double SadeState::sample_cr(int strategy, RandomSource& rng) const
{
    const double mean = crm_[static_cast<std::size_t>(strategy)];
    double cr = rng.next_normal(mean, cr_scale_);
    while (cr < 0.0 || cr > 1.0)
        cr = rng.next_normal(mean, cr_scale_);
    return cr;
}

void SadeState::record_trial(int strategy, bool success, double cr)
{
    const auto k = static_cast<std::size_t>(strategy);
    if (success) {
        ++successes_[k];
        if (cr >= 0.0)
            success_crs_[k].push_back(cr);
    } else {
        ++failures_[k];
    }
}

void SadeState::end_generation()
{
    if (++generations_ < learning_period_)
        return;
    generations_ = 0;

    int total = 0;
    for (int k = 0; k < kStrategies; ++k)
        total += successes_[static_cast<std::size_t>(k)] + failures_[static_cast<std::size_t>(k)];
    if (total == 0)
        return; // nothing recorded this period

    constexpr double epsilon = 0.01;
    std::array<double, kStrategies> weight {};
    double sum = 0.0;
    for (int k = 0; k < kStrategies; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const int trials = successes_[i] + failures_[i];
        const double rate = trials > 0 ? static_cast<double>(successes_[i]) / trials : 0.0;
        weight[i] = rate + epsilon;
        sum += weight[i];
    }
    for (int k = 0; k < kStrategies; ++k)
        probabilities_[static_cast<std::size_t>(k)] = weight[static_cast<std::size_t>(k)] / sum;

    for (int k = 0; k < kStrategies; ++k) {
        auto& crs = success_crs_[static_cast<std::size_t>(k)];
        if (!crs.empty()) {
            std::sort(crs.begin(), crs.end());
            crm_[static_cast<std::size_t>(k)] = crs[crs.size() / 2];
        }
        crs.clear();
    }
    successes_.fill(0);
    failures_.fill(0);
}

// --- runs --------------------------------------------------------------------

namespace {

    double checked_eval(PathObjective& objective, double alpha)
    {
        const std::optional<double> fitness = objective.evaluate(alpha);
        return fitness ? *fitness : std::numeric_limits<double>::infinity();
    }

    std::vector<Individual> init_population(const OptimizerConfig& config,
        PathObjective& objective, RandomSource& rng)
    {
        std::vector<Individual> population(static_cast<std::size_t>(config.population));
        for (auto& individual : population) {
            individual.position = config.alpha_min
                + rng.next_uniform() * (config.alpha_max - config.alpha_min);
            individual.fitness = std::numeric_limits<double>::infinity();
        }
        for (auto& individual : population) {
            if (objective.budget().exhausted())
                break;
            individual.fitness = checked_eval(objective, individual.position);
        }
        return population;
    }

    int best_index(std::span<const Individual> population)
    {
        int best = 0;
        for (int i = 1; i < static_cast<int>(population.size()); ++i)
            if (population[static_cast<std::size_t>(i)].fitness
                < population[static_cast<std::size_t>(best)].fitness)
                best = i;
        return best;
    }

    void run_pso(const OptimizerConfig& config, PathObjective& objective,
        RandomSource& rng)
    {
        struct Particle {
            double position = 0.0;
            double velocity = 0.0;
            double fitness = 0.0;
            double best_position = 0.0;
            double best_fitness = 0.0;
        };

        std::vector<Particle> swarm(static_cast<std::size_t>(config.population));
        for (auto& p : swarm) {
            p.position = config.alpha_min
                + rng.next_uniform() * (config.alpha_max - config.alpha_min);
            p.velocity = 0.0;
            p.fitness = std::numeric_limits<double>::infinity();
        }
        for (auto& p : swarm) {
            if (objective.budget().exhausted())
                break;
            p.fitness = checked_eval(objective, p.position);
            p.best_position = p.position;
            p.best_fitness = p.fitness;
        }

        auto global_best = [&swarm] {
            std::size_t best = 0;
            for (std::size_t i = 1; i < swarm.size(); ++i)
                if (swarm[i].best_fitness < swarm[best].best_fitness)
                    best = i;
            return best;
        };

        std::size_t gbest = global_best();
        while (objective.budget().remaining() >= config.population) {
            // Synchronous update: the whole generation moves against the
            // global best of the previous one.
            const double gbest_position = swarm[gbest].best_position;
            for (auto& p : swarm) {
                const double r1 = rng.next_uniform();
                const double r2 = rng.next_uniform();
                p.velocity = pso_velocity(p.velocity, p.position, p.best_position,
                    gbest_position, config.omega, config.c1, config.c2, r1, r2);
                p.position = config.clamp(p.position + p.velocity);
                p.fitness = checked_eval(objective, p.position);
                if (p.fitness < p.best_fitness) {
                    p.best_fitness = p.fitness;
                    p.best_position = p.position;
                }
            }
            gbest = global_best();
        }
    }

    void run_de(const OptimizerConfig& config, PathObjective& objective,
        RandomSource& rng, bool best_variant)
    {
        std::vector<Individual> population = init_population(config, objective, rng);
        int best = best_index(population);

        while (objective.budget().remaining() >= config.population) {
            for (int i = 0; i < config.population; ++i) {
                auto& target = population[static_cast<std::size_t>(i)];
                const double mutant = best_variant
                    ? de_mutate_best(population, i, best, config.weight_f, config, rng)
                    : de_mutate_rand(population, i, config.weight_f, config, rng);
                de_crossover_select(target, mutant, objective);
                if (target.fitness < population[static_cast<std::size_t>(best)].fitness)
                    best = i;
            }
        }
    }

    void run_sade(const OptimizerConfig& config, PathObjective& objective,
        RandomSource& rng)
    {
        std::vector<Individual> population = init_population(config, objective, rng);
        int best = best_index(population);
        SadeState state(config.sade_learning_period, config.sade_cr_scale);

        const auto position = [&population](int i) {
            return population[static_cast<std::size_t>(i)].position;
        };

        while (objective.budget().remaining() >= config.population) {
            for (int i = 0; i < config.population; ++i) {
                const int strategy = state.sample_strategy(rng);
                const double f = rng.next_normal(config.sade_f_mean, config.sade_f_scale);
                double cr = -1.0;
                if (strategy != 3)
                    cr = state.sample_cr(strategy, rng);

                double mutant = 0.0;
                switch (strategy) {
                case 0: { // rand/1/bin
                    int r[3];
                    draw_distinct(config.population, i, rng, r);
                    mutant = position(r[0]) + f * (position(r[1]) - position(r[2]));
                    break;
                }
                case 1: { // rand-to-best/2/bin
                    int r[4];
                    draw_distinct(config.population, i, rng, r);
                    mutant = position(i) + f * (position(best) - position(i))
                        + f * (position(r[0]) - position(r[1]))
                        + f * (position(r[2]) - position(r[3]));
                    break;
                }
                case 2: { // rand/2/bin
                    int r[5];
                    draw_distinct(config.population, i, rng, r);
                    mutant = position(r[0]) + f * (position(r[1]) - position(r[2]))
                        + f * (position(r[3]) - position(r[4]));
                    break;
                }
                default: { // current-to-rand/1 (no crossover)
                    int r[3];
                    draw_distinct(config.population, i, rng, r);
                    const double k = rng.next_uniform();
                    mutant = position(i) + k * (position(r[0]) - position(i))
                        + f * (position(r[1]) - position(r[2]));
                    break;
                }
                }

                auto& target = population[static_cast<std::size_t>(i)];
                const bool won = de_crossover_select(target, config.clamp(mutant), objective);
                state.record_trial(strategy, won, cr);
                if (target.fitness < population[static_cast<std::size_t>(best)].fitness)
                    best = i;
            }
            state.end_generation();
        }
    }

    void run_rbde(const OptimizerConfig& config, PathObjective& objective,
        RandomSource& rng)
    {
        std::vector<Individual> population = init_population(config, objective, rng);

        std::vector<int> ranking(static_cast<std::size_t>(config.population));
        while (objective.budget().remaining() >= config.population) {
            for (int i = 0; i < config.population; ++i)
                ranking[static_cast<std::size_t>(i)] = i;
            std::stable_sort(ranking.begin(), ranking.end(), [&population](int a, int b) {
                return population[static_cast<std::size_t>(a)].fitness
                    < population[static_cast<std::size_t>(b)].fitness;
            });

            for (int rank = 0; rank < config.population; ++rank) {
                const std::array<int, 3> donors
                    = rbde_select_indices(config.population, rank, config.beta, rng);
                const auto at_rank = [&](int r) {
                    return population[static_cast<std::size_t>(ranking[static_cast<std::size_t>(r)])].position;
                };
                const double mutant = config.clamp(at_rank(donors[0])
                    + config.weight_f * (at_rank(donors[1]) - at_rank(donors[2])));
                auto& target = population[static_cast<std::size_t>(ranking[static_cast<std::size_t>(rank)])];
                de_crossover_select(target, mutant, objective);
            }
        }
    }

} // namespace

OptimizeResult optimize(const OptimizerConfig& config, PathObjective& objective)
{
    if (config.population < 4)
        throw std::invalid_argument("optimize: population must be at least 4");
    if (objective.budget().used() != 0)
        throw std::invalid_argument("optimize: objective must be fresh");

    RandomStream rng(config.seed);

    switch (config.kind) {
    case OptimizerKind::Pso:
        run_pso(config, objective, rng);
        break;
    case OptimizerKind::DeBest:
        run_de(config, objective, rng, true);
        break;
    case OptimizerKind::DeRand:
        run_de(config, objective, rng, false);
        break;
    case OptimizerKind::Sade:
        run_sade(config, objective, rng);
        break;
    case OptimizerKind::Rbde:
        run_rbde(config, objective, rng);
        break;
    }

    OptimizeResult result;
    result.trace.reserve(objective.history().size());
    result.best_alpha = config.alpha_min;
    result.best_fitness = objective.penalty();
    double best_so_far = std::numeric_limits<double>::infinity();
    for (const PathObjective::Evaluation& eval : objective.history()) {
        if (eval.fitness < best_so_far) {
            best_so_far = eval.fitness;
            result.best_alpha = eval.alpha;
        }
        result.trace.push_back(best_so_far);
    }
    if (!objective.history().empty())
        result.best_fitness = best_so_far;
    result.incumbent = objective.incumbent();
    return result;
}

} // namespace latticeplan
