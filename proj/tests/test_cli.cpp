#include "latticeplan/cli.hpp"
#include "latticeplan/grid.hpp"
#include "latticeplan/path.hpp"
#include "latticeplan/svg.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace latticeplan;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir()
    {
        path = fs::temp_directory_path() / fs::path("latticeplan_test_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    static int& counter()
    {
        static int value = 0;
        return value;
    }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& filename, const std::string& content)
{
    std::ofstream out(filename, std::ios::binary);
    out << content;
}

std::string slurp(const std::string& filename)
{
    std::ifstream in(filename, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int count_occurrences(const std::string& text, const std::string& needle)
{
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("generate-map writes the rasterized recipe")
{
    TempDir dir;
    write(dir.file("empty.json"), R"({"name":"empty","n":4,"kind":"rectangles"})");
    CHECK(run_cli({ "generate-map", "--recipe", dir.file("empty.json"), "--out", dir.file("empty.txt") }) == 0);
    CHECK(slurp(dir.file("empty.txt")) == "....\n....\n....\n....\n");

    write(dir.file("bad.json"), R"({"name":"bad","n":4,"kind":"rectangles","rects":[{"x":3,"y":3,"w":4,"h":1}]})");
    CHECK(run_cli({ "generate-map", "--recipe", dir.file("bad.json"), "--out", dir.file("bad.txt") }) == 2);

    CHECK(run_cli({ "generate-map", "--recipe", dir.file("missing.json"), "--out", dir.file("x.txt") }) == 2);
}

TEST_CASE("sample: success, domain failure and usage failure exit codes")
{
    TempDir dir;
    OccupancyGrid open(50);
    write(dir.file("open.txt"), save_map(open));

    CHECK(run_cli({ "sample", "--map", dir.file("open.txt"), "--alpha", "1.2",
                      "--seed", "9", "--out", dir.file("path.json") })
        == 0);
    const LatticePath path = path_from_json(slurp(dir.file("path.json")));
    CHECK(path.nodes.front() == GridPoint { 0, 0 });
    CHECK(path.nodes.back() == GridPoint { 49, 49 });

    // determinism: identical invocation, identical bytes
    CHECK(run_cli({ "sample", "--map", dir.file("open.txt"), "--alpha", "1.2",
                      "--seed", "9", "--out", dir.file("path2.json") })
        == 0);
    CHECK(slurp(dir.file("path.json")) == slurp(dir.file("path2.json")));

    OccupancyGrid blocked(20);
    for (int y = 0; y < 20; ++y)
        blocked.set_occupied(18, y);
    write(dir.file("blocked.txt"), save_map(blocked));
    CHECK(run_cli({ "sample", "--map", dir.file("blocked.txt"), "--alpha", "1.0",
                      "--seed", "3", "--out", dir.file("none.json") })
        == 1);

    CHECK(run_cli({ "sample", "--map", dir.file("ghost.txt"), "--alpha", "1.0" }) == 2);
    CHECK(run_cli({ "sample", "--map", dir.file("open.txt"), "--alpha", "1.0", "--side", "diagonal" }) == 2);
}

TEST_CASE("optimize emits a deterministic result document and trace")
{
    TempDir dir;
    OccupancyGrid open(50);
    write(dir.file("open.txt"), save_map(open));

    const std::vector<std::string> args { "optimize", "--map", dir.file("open.txt"),
        "--optimizer", "derand", "--seed", "5", "--evals", "200",
        "--out", dir.file("result.json"), "--trace-out", dir.file("trace.csv") };
    CHECK(run_cli(args) == 0);

    const nlohmann::json result = nlohmann::json::parse(slurp(dir.file("result.json")));
    CHECK(result.at("optimizer") == "derand");
    CHECK(result.at("evals") == 200);
    CHECK(result.at("feasible") == true);
    CHECK(result.at("best_length").get<double>() < 100.0);
    CHECK(result.contains("best_tuple"));
    CHECK(result.contains("best_path"));
    CHECK(result.at("trace_file") == dir.file("trace.csv"));

    const std::string trace = slurp(dir.file("trace.csv"));
    CHECK(trace.rfind("evaluation_index,best_fitness\n", 0) == 0);
    CHECK(count_occurrences(trace, "\n") == 201); // header + 200 rows

    std::vector<std::string> again(args);
    again[10] = dir.file("result2.json");
    again[12] = dir.file("trace2.csv");
    CHECK(run_cli(again) == 0);
    // identical modulo the embedded trace filename
    nlohmann::json second = nlohmann::json::parse(slurp(dir.file("result2.json")));
    second["trace_file"] = dir.file("trace.csv");
    nlohmann::json first = result;
    CHECK(first.dump() == second.dump());
    CHECK(slurp(dir.file("trace.csv")) == slurp(dir.file("trace2.csv")));

    CHECK(run_cli({ "optimize", "--map", dir.file("open.txt"), "--optimizer", "simulated-annealing" }) == 2);

    OccupancyGrid blocked(20);
    for (int y = 0; y < 20; ++y)
        blocked.set_occupied(18, y);
    write(dir.file("blocked.txt"), save_map(blocked));
    CHECK(run_cli({ "optimize", "--map", dir.file("blocked.txt"), "--optimizer", "pso",
                      "--seed", "1", "--evals", "50", "--out", dir.file("blocked.json") })
        == 1);
    const nlohmann::json infeasible = nlohmann::json::parse(slurp(dir.file("blocked.json")));
    CHECK(infeasible.at("feasible") == false);
}

TEST_CASE("bench runs a small manifest and is byte-reproducible")
{
    TempDir dir;
    const std::string manifest = R"({
        "name": "mini",
        "runs": 3,
        "evals": 60,
        "base_seed": 11,
        "optimizers": [ {"kind": "pso"}, {"kind": "debest"}, {"kind": "sade"} ],
        "maps": [
            {"name": "open10", "n": 10, "kind": "rectangles"},
            {"name": "slit", "n": 10, "kind": "narrow_passage",
             "walls": [{"axis": "horizontal", "position": 5, "span_from": 0, "span_to": 9,
                        "gaps": [{"at": 2, "width": 1}]}]}
        ]
    })";
    write(dir.file("suite.json"), manifest);

    CHECK(run_cli({ "bench", "--manifest", dir.file("suite.json"), "--out", dir.file("out_a") }) == 0);
    CHECK(fs::exists(dir.path / "out_a" / "success_ratio.csv"));
    CHECK(fs::exists(dir.path / "out_a" / "report.json"));
    CHECK(fs::exists(dir.path / "out_a" / "scenarios" / "open10__pso.json"));
    CHECK(fs::exists(dir.path / "out_a" / "scenarios" / "slit__sade.json"));
    CHECK(fs::exists(dir.path / "out_a" / "traces" / "open10__sade_mean.csv"));
    CHECK(fs::exists(dir.path / "out_a" / "traces" / "slit__pso_min.csv"));
    CHECK(fs::exists(dir.path / "out_a" / "significance" / "open10.csv"));

    CHECK(run_cli({ "bench", "--manifest", dir.file("suite.json"), "--out", dir.file("out_b"),
                      "--threads", "2" })
        == 0);
    for (const auto& entry : fs::recursive_directory_iterator(dir.path / "out_a")) {
        if (!entry.is_regular_file())
            continue;
        const fs::path relative = fs::relative(entry.path(), dir.path / "out_a");
        CHECK(slurp(entry.path().string()) == slurp((dir.path / "out_b" / relative).string()));
    }

    const nlohmann::json report = nlohmann::json::parse(slurp(dir.file("out_a/report.json")));
    CHECK(report.at("trend_check").at("narrow_maps").size() == 1);

    CHECK(run_cli({ "bench", "--manifest", dir.file("nope.json"), "--out", dir.file("x") }) == 2);
}

TEST_CASE("render produces overlayable SVG with exact coordinates")
{
    TempDir dir;
    OccupancyGrid grid(6);
    grid.set_occupied(2, 3);
    grid.set_occupied(3, 3);
    write(dir.file("map.txt"), save_map(grid));

    const LatticePath path = tuple_to_path(TreeTuple({ 2, 1, 1, 0, 1, 0 }), DiagonalSide::Above);
    write(dir.file("p.json"), path_to_json(path));

    std::vector<std::string> args { "render", "--map", dir.file("map.txt"),
        "--out", dir.file("map.svg"), "--cell", "10", "--opacity", "0.2" };
    for (int i = 0; i < 20; ++i)
        args.push_back(dir.file("p.json"));
    CHECK(run_cli(args) == 0);

    const std::string svg = slurp(dir.file("map.svg"));
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == 20);
    CHECK(count_occurrences(svg, "stroke-opacity=\"0.2\"") == 20);
    CHECK(svg.find("</svg>") != std::string::npos);

    // node (x, y) maps to pixel (10x + 5, 10(n-1-y) + 5); first path node is
    // (0,0) -> (5, 55), second (0,2) -> (5, 35)
    CHECK(svg.find("points=\"5,55 5,35") != std::string::npos);

    // map-only render works and odd cell sizes are a usage error
    CHECK(run_cli({ "render", "--map", dir.file("map.txt"), "--out", dir.file("bare.svg") }) == 0);
    CHECK(count_occurrences(slurp(dir.file("bare.svg")), "<polyline") == 0);
    CHECK(run_cli({ "render", "--map", dir.file("map.txt"), "--out", dir.file("odd.svg"),
                      "--cell", "7" })
        == 2);
}

TEST_CASE("svg renderer round-trips path pixels exactly")
{
    OccupancyGrid grid(8);
    const LatticePath path = tuple_to_path(TreeTuple({ 3, 0, 1, 1, 0, 2, 0, 0 }), DiagonalSide::Above);
    RenderSpec spec;
    spec.cell_px = 12;
    const std::string svg = render_svg(grid, std::vector<LatticePath> { path }, spec);

    const std::size_t start = svg.find("points=\"");
    REQUIRE(start != std::string::npos);
    const std::size_t end = svg.find('"', start + 8);
    std::istringstream points(svg.substr(start + 8, end - start - 8));
    std::string pair;
    std::size_t index = 0;
    while (points >> pair) {
        const std::size_t comma = pair.find(',');
        const int px = std::stoi(pair.substr(0, comma));
        const int py = std::stoi(pair.substr(comma + 1));
        REQUIRE(index < path.nodes.size());
        CHECK((px - 6) % 12 == 0);
        CHECK(path.nodes[index].x == (px - 6) / 12);
        CHECK(path.nodes[index].y == 8 - 1 - (py - 6) / 12);
        ++index;
    }
    CHECK(index == path.nodes.size());
}

TEST_CASE("missing subcommand is a usage error")
{
    CHECK(run_cli({}) == 2);
}
