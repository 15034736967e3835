#ifndef LATTICEPLAN_RECIPE_HPP
#define LATTICEPLAN_RECIPE_HPP

#include "latticeplan/grid.hpp"
#include "latticeplan/path.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace latticeplan {

struct RecipeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RecipeKind {
    Rectangles, ///< explicit axis-aligned filled rectangles (convex blocks)
    Polygon, ///< explicit filled polygons; L/U and other non-convex shapes
    NarrowPassage, ///< solid walls pierced by corridors of width >= 1
    RandomBlobs, ///< seeded random rectangles
};

struct RectShape {
    int x = 0, y = 0, w = 1, h = 1;
};

struct PolygonShape {
    std::vector<GridPoint> vertices;
};

/// A wall is a solid band of occupied nodes across the grid, `thickness`
/// rows (horizontal) or columns (vertical) thick, spanning [span_from,
/// span_to] along its length, with free corridors carved at the gaps.
struct WallSpec {
    enum class Axis { Horizontal,
        Vertical };
    struct Gap {
        int at = 0;
        int width = 1;
    };

    Axis axis = Axis::Horizontal;
    int position = 0;
    int thickness = 1;
    int span_from = 0;
    int span_to = 0;
    std::vector<Gap> gaps;
};

struct BlobSpec {
    int count = 0;
    int min_extent = 2;
    int max_extent = 6;
    /// When set, blobs are resampled until they intersect the y >= x half,
    /// where above-diagonal paths live.
    bool above_diagonal = false;
};

/// Deterministic map description: identical recipe + seed reproduces the
/// grid bit for bit.
struct MapRecipe {
    std::string name;
    int n = 50;
    RecipeKind kind = RecipeKind::Rectangles;
    std::uint64_t seed = 0;

    std::vector<RectShape> rects; // Rectangles
    std::vector<PolygonShape> polygons; // Polygon
    std::vector<WallSpec> walls; // NarrowPassage
    BlobSpec blobs; // RandomBlobs
};

const char* to_string(RecipeKind kind);
RecipeKind recipe_kind_from_string(const std::string& s);

MapRecipe recipe_from_json(const nlohmann::json& j);
nlohmann::json recipe_to_json(const MapRecipe& recipe);
MapRecipe load_recipe_file(const std::string& filename);

/// Rasterizes the recipe. Shapes must lie inside the grid (RecipeError
/// otherwise); the origin and destination nodes always come out free.
OccupancyGrid generate_map(const MapRecipe& recipe);

} // namespace latticeplan

#endif
