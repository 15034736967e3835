#include "latticeplan/bench.hpp"

#include "latticeplan/stats.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace latticeplan {

std::vector<double> mean_convergence(std::span<const RunRecord> records)
{
    if (records.empty())
        throw std::invalid_argument("mean_convergence: no records");
    const std::size_t length = records.front().trace.size();
    std::vector<double> mean(length, 0.0);
    for (const RunRecord& record : records) {
        if (record.trace.size() != length)
            throw std::invalid_argument("mean_convergence: traces must be aligned");
        for (std::size_t i = 0; i < length; ++i)
            mean[i] += record.trace[i];
    }
    for (double& value : mean)
        value /= static_cast<double>(records.size());
    return mean;
}

std::vector<double> min_convergence(std::span<const RunRecord> records)
{
    if (records.empty())
        throw std::invalid_argument("min_convergence: no records");
    const std::size_t length = records.front().trace.size();
    std::vector<double> lower(records.front().trace.begin(), records.front().trace.end());
    for (const RunRecord& record : records.subspan(1)) {
        if (record.trace.size() != length)
            throw std::invalid_argument("min_convergence: traces must be aligned");
        for (std::size_t i = 0; i < length; ++i)
            lower[i] = std::min(lower[i], record.trace[i]);
    }
    return lower;
}

ScenarioResult run_scenario(const OccupancyGrid& map, OptimizerKind kind,
    int runs, int evals, std::uint64_t base_seed,
    const OptimizerConfig& config_proto, const SamplerConfig& sampler_config)
{
    ScenarioResult scenario;
    scenario.map_name = map.name();
    scenario.optimizer = kind;
    scenario.runs = runs;
    scenario.evals = evals;
    scenario.base_seed = base_seed;
    scenario.records.reserve(static_cast<std::size_t>(runs));

    for (int j = 0; j < runs; ++j) {
        const std::uint64_t run_seed = base_seed + static_cast<std::uint64_t>(j);
        PathObjective objective(map, sampler_config, evals, derive_seed(run_seed, 0));
        OptimizerConfig config = config_proto;
        config.kind = kind;
        config.seed = derive_seed(run_seed, 1);
        const OptimizeResult result = optimize(config, objective);

        RunRecord record;
        record.map_name = map.name();
        record.optimizer = kind;
        record.seed = run_seed;
        record.trace = result.trace;
        record.trace.resize(static_cast<std::size_t>(evals),
            record.trace.empty() ? objective.penalty() : record.trace.back());
        record.best_length = record.trace.empty() ? objective.penalty() : record.trace.back();
        record.success = record.best_length < objective.penalty();
        record.best_alpha = result.best_alpha;
        if (result.incumbent) {
            record.best_tuple = result.incumbent->tuple;
            record.best_path = result.incumbent->path;
        }
        scenario.records.push_back(std::move(record));
    }

    int successes = 0;
    for (int j = 0; j < runs; ++j) {
        const RunRecord& record = scenario.records[static_cast<std::size_t>(j)];
        if (record.success)
            ++successes;
        if (scenario.best_run < 0
            || record.best_length < scenario.records[static_cast<std::size_t>(scenario.best_run)].best_length)
            scenario.best_run = j;
    }
    scenario.success_ratio = runs > 0 ? static_cast<double>(successes) / runs : 0.0;
    if (runs > 0) {
        scenario.mean_trace = mean_convergence(scenario.records);
        scenario.min_trace = min_convergence(scenario.records);
    }
    return scenario;
}

SuiteManifest manifest_from_json(const nlohmann::json& j,
    const std::filesystem::path& base_dir)
{
    SuiteManifest manifest;
    try {
        manifest.name = j.value("name", manifest.name);
        manifest.runs = j.value("runs", manifest.runs);
        manifest.evals = j.value("evals", manifest.evals);
        manifest.base_seed = j.value("base_seed", manifest.base_seed);
        if (j.contains("sampler")) {
            const auto& s = j.at("sampler");
            const std::string side = s.value("side", std::string { "above" });
            if (side != "above" && side != "below")
                throw RecipeError("sampler side must be 'above' or 'below'");
            manifest.sampler.side = side == "above" ? DiagonalSide::Above : DiagonalSide::Below;
            manifest.sampler.strict_collision = s.value("strict_collision", true);
        }
        if (j.contains("optimizers")) {
            for (const auto& item : j.at("optimizers"))
                manifest.optimizers.push_back(optimizer_config_from_json(item));
        } else {
            for (const OptimizerKind kind : all_optimizer_kinds()) {
                OptimizerConfig config;
                config.kind = kind;
                manifest.optimizers.push_back(config);
            }
        }
        for (const auto& entry : j.at("maps")) {
            if (entry.contains("recipe_file")) {
                const std::filesystem::path ref = entry.at("recipe_file").get<std::string>();
                const std::filesystem::path resolved = ref.is_absolute() ? ref : base_dir / ref;
                manifest.maps.push_back(load_recipe_file(resolved.string()));
            } else {
                manifest.maps.push_back(recipe_from_json(entry));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw RecipeError(std::string("malformed suite manifest: ") + e.what());
    }
    if (manifest.maps.empty())
        throw RecipeError("suite manifest lists no maps");
    if (manifest.runs < 1 || manifest.evals < 0)
        throw RecipeError("suite manifest needs runs >= 1 and evals >= 0");
    return manifest;
}

SuiteManifest load_manifest_file(const std::string& filename)
{
    std::ifstream in(filename);
    if (!in)
        throw RecipeError("cannot open manifest '" + filename + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw RecipeError(std::string("cannot parse manifest: ") + e.what());
    }
    return manifest_from_json(j, std::filesystem::path(filename).parent_path());
}

namespace {

    int default_thread_count()
    {
        int threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1)
            threads = 1;
        if (const char* cap_text = std::getenv("LATTICEPLAN_THREADS")) {
            const int cap = std::atoi(cap_text);
            if (cap >= 1)
                threads = std::min(threads, cap);
        }
        return threads;
    }

} // namespace

SuiteResult run_suite(const SuiteManifest& manifest, int threads)
{
    const int optimizer_count = static_cast<int>(manifest.optimizers.size());
    const int scenario_count = static_cast<int>(manifest.maps.size()) * optimizer_count;

    std::vector<OccupancyGrid> grids;
    grids.reserve(manifest.maps.size());
    for (const MapRecipe& recipe : manifest.maps)
        grids.push_back(generate_map(recipe));

    SuiteResult result;
    result.scenarios.resize(static_cast<std::size_t>(scenario_count));

    if (threads <= 0)
        threads = default_thread_count();
    threads = std::min(threads, std::max(scenario_count, 1));

    std::atomic<int> next { 0 };
    const auto worker = [&] {
        while (true) {
            const int s = next.fetch_add(1);
            if (s >= scenario_count)
                return;
            const int map_index = s / optimizer_count;
            const int optimizer_index = s % optimizer_count;
            const std::uint64_t scenario_seed = manifest.base_seed
                + static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(manifest.runs);
            result.scenarios[static_cast<std::size_t>(s)] = run_scenario(
                grids[static_cast<std::size_t>(map_index)],
                manifest.optimizers[static_cast<std::size_t>(optimizer_index)].kind,
                manifest.runs, manifest.evals, scenario_seed,
                manifest.optimizers[static_cast<std::size_t>(optimizer_index)],
                manifest.sampler);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    return result;
}

namespace {

    std::string format_double(double value)
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.10g", value);
        return buffer;
    }

    void write_file(const std::filesystem::path& path, const std::string& content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        out << content;
    }

    std::string trace_csv(std::span<const double> trace)
    {
        std::string csv = "evaluation_index,best_fitness\n";
        for (std::size_t i = 0; i < trace.size(); ++i) {
            csv += std::to_string(i + 1);
            csv += ',';
            csv += format_double(trace[i]);
            csv += '\n';
        }
        return csv;
    }

    nlohmann::json scenario_to_json(const ScenarioResult& scenario)
    {
        nlohmann::json j;
        j["map"] = scenario.map_name;
        j["optimizer"] = to_string(scenario.optimizer);
        j["runs"] = scenario.runs;
        j["evals"] = scenario.evals;
        j["base_seed"] = scenario.base_seed;
        j["success_ratio"] = scenario.success_ratio;

        auto runs = nlohmann::json::array();
        for (const RunRecord& record : scenario.records) {
            nlohmann::json r;
            r["seed"] = record.seed;
            r["success"] = record.success;
            r["best_length"] = record.best_length;
            r["best_alpha"] = record.best_alpha;
            runs.push_back(std::move(r));
        }
        j["run_records"] = std::move(runs);

        if (scenario.best_run >= 0) {
            const RunRecord& best = scenario.records[static_cast<std::size_t>(scenario.best_run)];
            nlohmann::json b;
            b["seed"] = best.seed;
            b["best_length"] = best.best_length;
            b["best_alpha"] = best.best_alpha;
            if (best.best_tuple)
                b["best_tuple"] = format_tuple(*best.best_tuple);
            if (best.best_path)
                b["best_path"] = nlohmann::json::parse(path_to_json(*best.best_path));
            j["best_run"] = std::move(b);
        }
        return j;
    }

} // namespace

TrendCheck trend_check(const SuiteManifest& manifest, const SuiteResult& result)
{
    TrendCheck trend;
    const int optimizer_count = static_cast<int>(manifest.optimizers.size());
    int sade_column = -1, debest_column = -1;
    for (int o = 0; o < optimizer_count; ++o) {
        if (manifest.optimizers[static_cast<std::size_t>(o)].kind == OptimizerKind::Sade)
            sade_column = o;
        if (manifest.optimizers[static_cast<std::size_t>(o)].kind == OptimizerKind::DeBest)
            debest_column = o;
    }
    if (sade_column < 0 || debest_column < 0)
        return trend;

    double sade_sum = 0.0, debest_sum = 0.0;
    for (int m = 0; m < static_cast<int>(manifest.maps.size()); ++m) {
        const MapRecipe& recipe = manifest.maps[static_cast<std::size_t>(m)];
        if (recipe.kind != RecipeKind::NarrowPassage)
            continue;
        trend.narrow_maps.push_back(recipe.name);
        sade_sum += result.scenarios[static_cast<std::size_t>(m * optimizer_count + sade_column)].success_ratio;
        debest_sum += result.scenarios[static_cast<std::size_t>(m * optimizer_count + debest_column)].success_ratio;
    }
    if (!trend.narrow_maps.empty()) {
        const double count = static_cast<double>(trend.narrow_maps.size());
        trend.sade_success = sade_sum / count;
        trend.debest_success = debest_sum / count;
    }
    trend.holds = trend.sade_success >= trend.debest_success;
    return trend;
}

void write_suite_outputs(const SuiteManifest& manifest, const SuiteResult& result,
    const std::filesystem::path& out_dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(out_dir / "scenarios");
    fs::create_directories(out_dir / "traces");
    fs::create_directories(out_dir / "significance");

    const int optimizer_count = static_cast<int>(manifest.optimizers.size());
    const int map_count = static_cast<int>(manifest.maps.size());

    // Success-ratio matrix, maps as rows.
    std::string matrix = "map";
    for (const OptimizerConfig& config : manifest.optimizers)
        matrix += std::string(",") + to_string(config.kind);
    matrix += '\n';
    for (int m = 0; m < map_count; ++m) {
        matrix += manifest.maps[static_cast<std::size_t>(m)].name;
        for (int o = 0; o < optimizer_count; ++o) {
            matrix += ',';
            matrix += format_double(
                result.scenarios[static_cast<std::size_t>(m * optimizer_count + o)].success_ratio);
        }
        matrix += '\n';
    }
    write_file(out_dir / "success_ratio.csv", matrix);

    for (const ScenarioResult& scenario : result.scenarios) {
        const std::string stem = scenario.map_name + "__" + to_string(scenario.optimizer);
        write_file(out_dir / "scenarios" / (stem + ".json"), scenario_to_json(scenario).dump(2) + "\n");
        write_file(out_dir / "traces" / (stem + "_mean.csv"), trace_csv(scenario.mean_trace));
        write_file(out_dir / "traces" / (stem + "_min.csv"), trace_csv(scenario.min_trace));
    }

    // Pairwise rank-sum matrix per map over final best fitnesses.
    for (int m = 0; m < map_count; ++m) {
        std::vector<std::vector<double>> samples(static_cast<std::size_t>(optimizer_count));
        for (int o = 0; o < optimizer_count; ++o) {
            const ScenarioResult& scenario
                = result.scenarios[static_cast<std::size_t>(m * optimizer_count + o)];
            for (const RunRecord& record : scenario.records)
                samples[static_cast<std::size_t>(o)].push_back(record.best_length);
        }
        std::string csv = "optimizer";
        for (const OptimizerConfig& config : manifest.optimizers)
            csv += std::string(",") + to_string(config.kind);
        csv += '\n';
        for (int a = 0; a < optimizer_count; ++a) {
            csv += to_string(manifest.optimizers[static_cast<std::size_t>(a)].kind);
            for (int b = 0; b < optimizer_count; ++b) {
                csv += ',';
                if (a == b) {
                    csv += "1";
                } else {
                    const RankSumResult test = rank_sum_test(
                        samples[static_cast<std::size_t>(a)], samples[static_cast<std::size_t>(b)]);
                    csv += format_double(test.p_value);
                }
            }
            csv += '\n';
        }
        write_file(out_dir / "significance" / (manifest.maps[static_cast<std::size_t>(m)].name + ".csv"), csv);
    }

    const TrendCheck trend = trend_check(manifest, result);
    nlohmann::json report;
    report["name"] = manifest.name;
    report["runs"] = manifest.runs;
    report["evals"] = manifest.evals;
    report["base_seed"] = manifest.base_seed;
    {
        auto maps = nlohmann::json::array();
        for (const MapRecipe& recipe : manifest.maps)
            maps.push_back({ { "name", recipe.name }, { "kind", to_string(recipe.kind) } });
        report["maps"] = std::move(maps);
        auto optimizers = nlohmann::json::array();
        for (const OptimizerConfig& config : manifest.optimizers)
            optimizers.push_back(to_string(config.kind));
        report["optimizers"] = std::move(optimizers);
    }
    report["trend_check"] = {
        { "narrow_maps", trend.narrow_maps },
        { "sade_success", trend.sade_success },
        { "debest_success", trend.debest_success },
        { "sade_at_least_debest", trend.holds },
    };
    write_file(out_dir / "report.json", report.dump(2) + "\n");
}

} // namespace latticeplan
