#include "latticeplan/bench.hpp"

#include <doctest.h>

#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace latticeplan;
namespace fs = std::filesystem;

namespace {

const fs::path kBenchmarks = LATTICEPLAN_BENCHMARKS_DIR;

std::string slurp(const fs::path& file)
{
    std::ifstream in(file, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string map_id(int i)
{
    return i < 10 ? "map0" + std::to_string(i) : "map" + std::to_string(i);
}

// Oracle: breadth-first search over the above-diagonal walk graph. North
// steps are always admissible; an east step from (x, y) needs y >= x + 1.
bool above_diagonal_reachable(const OccupancyGrid& grid)
{
    const int n = grid.size();
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    const auto index = [n](int x, int y) {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
    };
    std::deque<GridPoint> queue { { 0, 0 } };
    seen[index(0, 0)] = 1;
    while (!queue.empty()) {
        const GridPoint node = queue.front();
        queue.pop_front();
        if (node.x == n - 1 && node.y == n - 1)
            return true;
        if (node.y + 1 < n && !grid.occupied(node.x, node.y + 1) && !seen[index(node.x, node.y + 1)]) {
            seen[index(node.x, node.y + 1)] = 1;
            queue.push_back({ node.x, node.y + 1 });
        }
        if (node.x + 1 < n && node.y >= node.x + 1 && !grid.occupied(node.x + 1, node.y)
            && !seen[index(node.x + 1, node.y)]) {
            seen[index(node.x + 1, node.y)] = 1;
            queue.push_back({ node.x + 1, node.y });
        }
    }
    return false;
}

} // namespace

TEST_CASE("the 20 shipped maps round-trip byte for byte")
{
    for (int i = 1; i <= 20; ++i) {
        const fs::path file = kBenchmarks / "maps" / (map_id(i) + ".txt");
        INFO("map file ", file.string());
        const std::string text = slurp(file);
        CHECK(save_map(load_map(text)) == text);
    }
}

TEST_CASE("every shipped map is the rasterization of its committed recipe")
{
    for (int i = 1; i <= 20; ++i) {
        const MapRecipe recipe = load_recipe_file((kBenchmarks / "recipes" / (map_id(i) + ".json")).string());
        CHECK(recipe.name == map_id(i));
        CHECK(recipe.n == 50);
        const OccupancyGrid generated = generate_map(recipe);
        const std::string golden = slurp(kBenchmarks / "maps" / (map_id(i) + ".txt"));
        INFO("recipe ", recipe.name);
        CHECK(save_map(generated) == golden);
    }
}

TEST_CASE("shipped maps keep the corners free and admit an above-diagonal path")
{
    for (int i = 1; i <= 20; ++i) {
        const OccupancyGrid grid = load_map_file((kBenchmarks / "maps" / (map_id(i) + ".txt")).string());
        INFO("map ", map_id(i));
        CHECK_FALSE(grid.occupied(0, 0));
        CHECK_FALSE(grid.occupied(49, 49));
        CHECK(above_diagonal_reachable(grid));
    }
}

TEST_CASE("the suite manifest loads and pins the expected protocol")
{
    const SuiteManifest manifest = load_manifest_file((kBenchmarks / "suite.json").string());
    CHECK(manifest.runs == 20);
    CHECK(manifest.evals == 1000);
    CHECK(manifest.maps.size() == 20);
    CHECK(manifest.optimizers.size() == 5);
    CHECK(manifest.sampler.side == DiagonalSide::Above);
    CHECK(manifest.sampler.strict_collision);

    int narrow = 0;
    for (const MapRecipe& recipe : manifest.maps)
        if (recipe.kind == RecipeKind::NarrowPassage)
            ++narrow;
    CHECK(narrow == 4);
}
