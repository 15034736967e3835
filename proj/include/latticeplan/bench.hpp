#ifndef LATTICEPLAN_BENCH_HPP
#define LATTICEPLAN_BENCH_HPP

#include "latticeplan/optimizer.hpp"
#include "latticeplan/recipe.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latticeplan {

/// One independent optimization on one map.
struct RunRecord {
    std::string map_name;
    OptimizerKind optimizer = OptimizerKind::Pso;
    std::uint64_t seed = 0;
    std::vector<double> trace; ///< best-so-far, extended to the full budget
    bool success = false; ///< a feasible path was found
    double best_length = 0.0; ///< final best fitness (penalty when infeasible)
    double best_alpha = 0.0;
    std::optional<TreeTuple> best_tuple;
    std::optional<LatticePath> best_path;
};

/// Pointwise arithmetic mean / minimum of the run traces. Infeasible runs
/// contribute their penalty plateau. Rejects an empty record set.
std::vector<double> mean_convergence(std::span<const RunRecord> records);
std::vector<double> min_convergence(std::span<const RunRecord> records);

struct ScenarioResult {
    std::string map_name;
    OptimizerKind optimizer = OptimizerKind::Pso;
    int runs = 0;
    int evals = 0;
    std::uint64_t base_seed = 0;
    double success_ratio = 0.0;
    std::vector<double> mean_trace;
    std::vector<double> min_trace;
    int best_run = -1; ///< record index with the smallest best_length
    std::vector<RunRecord> records;
};

/// Runs `runs` independent optimizations with run seeds base_seed + 0 ..
/// base_seed + runs - 1 and aggregates them. Within a run, the objective
/// stream uses substream 0 of the run seed and the optimizer stream
/// substream 1. Deterministic for fixed inputs.
ScenarioResult run_scenario(const OccupancyGrid& map, OptimizerKind kind,
    int runs, int evals, std::uint64_t base_seed,
    const OptimizerConfig& config_proto, const SamplerConfig& sampler_config);

/// Benchmark suite description; pins everything needed to reproduce a
/// result set bit for bit.
struct SuiteManifest {
    std::string name = "suite";
    int runs = 20;
    int evals = 1000;
    std::uint64_t base_seed = 0;
    SamplerConfig sampler; ///< side and collision mode for all scenarios
    std::vector<OptimizerConfig> optimizers;
    std::vector<MapRecipe> maps;
};

/// Manifest JSON. Map entries either inline a recipe or name a recipe file
/// via {"recipe_file": "..."} resolved against `base_dir`.
SuiteManifest manifest_from_json(const nlohmann::json& j,
    const std::filesystem::path& base_dir);
SuiteManifest load_manifest_file(const std::string& filename);

struct SuiteResult {
    /// Scenario (map_index * optimizer_count + optimizer_index); scenario s
    /// uses run seeds base_seed + s*runs + 0 .. + runs-1.
    std::vector<ScenarioResult> scenarios;
};

/// Executes every (map, optimizer) scenario, at most `threads` at a time
/// (0 picks a default capped by the LATTICEPLAN_THREADS environment
/// variable). Results are identical regardless of thread count.
SuiteResult run_suite(const SuiteManifest& manifest, int threads = 0);

/// Comparison of SADE against DE/best/1/bin on the suite's narrow-passage
/// maps; the spread of success ratios is reported alongside the results.
struct TrendCheck {
    std::vector<std::string> narrow_maps;
    double sade_success = 0.0;
    double debest_success = 0.0;
    bool holds = true; ///< sade_success >= debest_success (vacuously true
                       ///< when no narrow maps are present)
};

TrendCheck trend_check(const SuiteManifest& manifest, const SuiteResult& result);

/// Writes the result tree:
///   success_ratio.csv, report.json,
///   scenarios/<map>__<optimizer>.json,
///   traces/<map>__<optimizer>_{mean,min}.csv,
///   significance/<map>.csv            (pairwise rank-sum p-values)
void write_suite_outputs(const SuiteManifest& manifest, const SuiteResult& result,
    const std::filesystem::path& out_dir);

} // namespace latticeplan

#endif
