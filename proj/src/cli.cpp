#include "latticeplan/cli.hpp"

#include "latticeplan/bench.hpp"
#include "latticeplan/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace latticeplan {

namespace {

    constexpr int kExitSuccess = 0;
    constexpr int kExitNoPath = 1;
    constexpr int kExitUsage = 2;

    void write_text(const std::string& filename, const std::string& content)
    {
        if (filename.empty() || filename == "-") {
            std::cout << content;
            return;
        }
        std::ofstream out(filename, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + filename + "'");
        out << content;
    }

    DiagonalSide side_from_string(const std::string& s)
    {
        if (s == "above")
            return DiagonalSide::Above;
        if (s == "below")
            return DiagonalSide::Below;
        throw CLI::ValidationError("--side must be 'above' or 'below'");
    }

    bool collision_from_string(const std::string& s)
    {
        if (s == "on")
            return true;
        if (s == "off")
            return false;
        throw CLI::ValidationError("--strict-collision must be 'on' or 'off'");
    }

    LatticePath read_path_file(const std::string& filename)
    {
        std::ifstream in(filename, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open path file '" + filename + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        // Accept either the bare node array or an optimize/bench result
        // object carrying a "best_path" member.
        const nlohmann::json j = nlohmann::json::parse(text);
        if (j.is_object() && j.contains("best_path"))
            return path_from_json(j.at("best_path").dump());
        return path_from_json(text);
    }

    std::string trace_csv(const std::vector<double>& trace)
    {
        std::string csv = "evaluation_index,best_fitness\n";
        for (std::size_t i = 0; i < trace.size(); ++i) {
            char line[64];
            std::snprintf(line, sizeof(line), "%zu,%.10g\n", i + 1, trace[i]);
            csv += line;
        }
        return csv;
    }

} // namespace

int run_cli(const std::vector<std::string>& args)
{
    CLI::App app { "lattice path planning toolkit" };
    app.require_subcommand(1);

    // generate-map
    std::string recipe_file, map_out;
    auto* generate = app.add_subcommand("generate-map", "rasterize a recipe into a map file");
    generate->add_option("--recipe", recipe_file, "recipe JSON file")->required();
    generate->add_option("--out", map_out, "output map file ('-' for stdout)");

    // sample
    std::string sample_map, sample_out;
    double sample_alpha = 1.0;
    std::uint64_t sample_seed = 0;
    std::string sample_side = "above", sample_collision = "on";
    auto* sample = app.add_subcommand("sample", "generate a single path for a fixed alpha");
    sample->add_option("--map", sample_map, "map file")->required();
    sample->add_option("--alpha", sample_alpha, "curvature preference (>= 0)")->required();
    sample->add_option("--seed", sample_seed, "random seed");
    sample->add_option("--side", sample_side, "above|below");
    sample->add_option("--strict-collision", sample_collision, "on|off");
    sample->add_option("--out", sample_out, "output path JSON ('-' for stdout)");

    // optimize
    std::string opt_map, opt_name, opt_config_file, opt_out, opt_trace_out;
    std::string opt_side = "above", opt_collision = "on";
    std::uint64_t opt_seed = 0;
    int opt_evals = 1000;
    auto* optimize_cmd = app.add_subcommand("optimize", "search for the best alpha on a map");
    optimize_cmd->add_option("--map", opt_map, "map file")->required();
    optimize_cmd->add_option("--optimizer", opt_name, "pso|debest|derand|sade|rbde")->required();
    optimize_cmd->add_option("--seed", opt_seed, "run seed");
    optimize_cmd->add_option("--evals", opt_evals, "evaluation budget");
    optimize_cmd->add_option("--config", opt_config_file, "optimizer config JSON file");
    optimize_cmd->add_option("--side", opt_side, "above|below");
    optimize_cmd->add_option("--strict-collision", opt_collision, "on|off");
    optimize_cmd->add_option("--out", opt_out, "result JSON ('-' for stdout)");
    optimize_cmd->add_option("--trace-out", opt_trace_out, "convergence trace CSV");

    // bench
    std::string bench_manifest, bench_out;
    int bench_threads = 0, bench_runs = 0, bench_evals = 0;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite from a manifest");
    bench->add_option("--manifest", bench_manifest, "suite manifest JSON")->required();
    bench->add_option("--out", bench_out, "output directory")->required();
    bench->add_option("--threads", bench_threads, "parallel scenarios (default: cores, capped by LATTICEPLAN_THREADS)");
    bench->add_option("--runs", bench_runs, "override manifest run count");
    bench->add_option("--evals", bench_evals, "override manifest evaluation budget");

    // render
    std::string render_map, render_out;
    std::vector<std::string> render_paths;
    int render_cell = 10;
    double render_opacity = 0.2;
    auto* render = app.add_subcommand("render", "draw a map and overlaid paths as SVG");
    render->add_option("--map", render_map, "map file")->required();
    render->add_option("paths", render_paths, "path JSON files to overlay");
    render->add_option("--out", render_out, "output SVG ('-' for stdout)");
    render->add_option("--cell", render_cell, "cell size in pixels (even)");
    render->add_option("--opacity", render_opacity, "per-path stroke opacity");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("latticeplan");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            const MapRecipe recipe = load_recipe_file(recipe_file);
            const OccupancyGrid grid = generate_map(recipe);
            write_text(map_out, save_map(grid));
            return kExitSuccess;
        }

        if (sample->parsed()) {
            const OccupancyGrid grid = load_map_file(sample_map);
            SamplerConfig config;
            config.alpha = sample_alpha;
            config.side = side_from_string(sample_side);
            config.strict_collision = collision_from_string(sample_collision);
            if (config.alpha < 0.0)
                throw CLI::ValidationError("--alpha must be >= 0");
            RandomStream rng(sample_seed);
            const std::optional<LatticePath> path = generate_path(grid, config, rng);
            if (!path) {
                std::cerr << "no collision-free path for this draw\n";
                return kExitNoPath;
            }
            write_text(sample_out, path_to_json(*path) + "\n");
            return kExitSuccess;
        }

        if (optimize_cmd->parsed()) {
            const OccupancyGrid grid = load_map_file(opt_map);
            OptimizerConfig config;
            if (!opt_config_file.empty()) {
                std::ifstream in(opt_config_file);
                if (!in)
                    throw std::runtime_error("cannot open config '" + opt_config_file + "'");
                nlohmann::json j;
                in >> j;
                config = optimizer_config_from_json(j);
            }
            config.kind = optimizer_kind_from_string(opt_name);
            config.seed = derive_seed(opt_seed, 1);

            SamplerConfig sampler_config;
            sampler_config.side = side_from_string(opt_side);
            sampler_config.strict_collision = collision_from_string(opt_collision);

            PathObjective objective(grid, sampler_config, opt_evals, derive_seed(opt_seed, 0));
            const OptimizeResult result = optimize(config, objective);

            nlohmann::json out;
            out["map"] = grid.name();
            out["optimizer"] = opt_name;
            out["seed"] = opt_seed;
            out["evals"] = objective.budget().used();
            out["best_alpha"] = result.best_alpha;
            out["best_fitness"] = result.best_fitness;
            out["feasible"] = result.incumbent.has_value();
            if (result.incumbent) {
                out["best_length"] = result.incumbent->length;
                out["best_tuple"] = format_tuple(result.incumbent->tuple);
                out["best_path"] = nlohmann::json::parse(path_to_json(result.incumbent->path));
            }
            if (!opt_trace_out.empty()) {
                out["trace_file"] = opt_trace_out;
                write_text(opt_trace_out, trace_csv(result.trace));
            }
            write_text(opt_out, out.dump(2) + "\n");
            return result.incumbent ? kExitSuccess : kExitNoPath;
        }

        if (bench->parsed()) {
            SuiteManifest manifest = load_manifest_file(bench_manifest);
            if (bench_runs > 0)
                manifest.runs = bench_runs;
            if (bench_evals > 0)
                manifest.evals = bench_evals;
            const SuiteResult result = run_suite(manifest, bench_threads);
            write_suite_outputs(manifest, result, bench_out);

            const TrendCheck trend = trend_check(manifest, result);
            std::cout << "suite '" << manifest.name << "': "
                      << manifest.maps.size() << " maps x " << manifest.optimizers.size()
                      << " optimizers x " << manifest.runs << " runs x "
                      << manifest.evals << " evals -> " << bench_out << "\n";
            if (!trend.narrow_maps.empty()) {
                std::cout << "narrow-passage success: sade " << trend.sade_success
                          << " vs debest " << trend.debest_success
                          << (trend.holds ? "" : "  [reversal: investigate]") << "\n";
            }
            return kExitSuccess;
        }

        if (render->parsed()) {
            const OccupancyGrid grid = load_map_file(render_map);
            std::vector<LatticePath> paths;
            paths.reserve(render_paths.size());
            for (const std::string& file : render_paths)
                paths.push_back(read_path_file(file));
            RenderSpec spec;
            spec.cell_px = render_cell;
            spec.path_opacity = render_opacity;
            write_text(render_out, render_svg(grid, paths, spec));
            return kExitSuccess;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace latticeplan
