#include "latticeplan/recipe.hpp"

#include "latticeplan/random.hpp"

#include <algorithm>
#include <fstream>

namespace latticeplan {

const char* to_string(RecipeKind kind)
{
    switch (kind) {
    case RecipeKind::Rectangles:
        return "rectangles";
    case RecipeKind::Polygon:
        return "polygon";
    case RecipeKind::NarrowPassage:
        return "narrow_passage";
    case RecipeKind::RandomBlobs:
        return "random_blobs";
    }
    return "rectangles";
}

RecipeKind recipe_kind_from_string(const std::string& s)
{
    if (s == "rectangles")
        return RecipeKind::Rectangles;
    if (s == "polygon")
        return RecipeKind::Polygon;
    if (s == "narrow_passage")
        return RecipeKind::NarrowPassage;
    if (s == "random_blobs")
        return RecipeKind::RandomBlobs;
    throw RecipeError("unknown recipe kind '" + s + "'");
}

MapRecipe recipe_from_json(const nlohmann::json& j)
{
    MapRecipe recipe;
    try {
        recipe.name = j.value("name", std::string {});
        recipe.n = j.value("n", 50);
        recipe.seed = j.value("seed", std::uint64_t { 0 });
        recipe.kind = recipe_kind_from_string(j.value("kind", std::string { "rectangles" }));
        for (const auto& r : j.value("rects", nlohmann::json::array()))
            recipe.rects.push_back(RectShape { r.at("x"), r.at("y"), r.at("w"), r.at("h") });
        for (const auto& poly : j.value("polygons", nlohmann::json::array())) {
            PolygonShape shape;
            for (const auto& v : poly)
                shape.vertices.push_back(GridPoint { v.at(0), v.at(1) });
            recipe.polygons.push_back(std::move(shape));
        }
        for (const auto& w : j.value("walls", nlohmann::json::array())) {
            WallSpec wall;
            const std::string axis = w.at("axis");
            if (axis == "horizontal")
                wall.axis = WallSpec::Axis::Horizontal;
            else if (axis == "vertical")
                wall.axis = WallSpec::Axis::Vertical;
            else
                throw RecipeError("wall axis must be 'horizontal' or 'vertical'");
            wall.position = w.at("position");
            wall.thickness = w.value("thickness", 1);
            wall.span_from = w.value("span_from", 0);
            wall.span_to = w.value("span_to", recipe.n - 1);
            for (const auto& g : w.value("gaps", nlohmann::json::array()))
                wall.gaps.push_back(WallSpec::Gap { g.at("at"), g.value("width", 1) });
            recipe.walls.push_back(std::move(wall));
        }
        if (j.contains("blobs")) {
            const auto& b = j.at("blobs");
            recipe.blobs.count = b.value("count", 0);
            recipe.blobs.min_extent = b.value("min_extent", 2);
            recipe.blobs.max_extent = b.value("max_extent", 6);
            recipe.blobs.above_diagonal = b.value("above_diagonal", false);
        }
    } catch (const nlohmann::json::exception& e) {
        throw RecipeError(std::string("malformed recipe: ") + e.what());
    }
    return recipe;
}

nlohmann::json recipe_to_json(const MapRecipe& recipe)
{
    nlohmann::json j;
    j["name"] = recipe.name;
    j["n"] = recipe.n;
    j["kind"] = to_string(recipe.kind);
    j["seed"] = recipe.seed;
    if (!recipe.rects.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& r : recipe.rects)
            arr.push_back({ { "x", r.x }, { "y", r.y }, { "w", r.w }, { "h", r.h } });
        j["rects"] = std::move(arr);
    }
    if (!recipe.polygons.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& poly : recipe.polygons) {
            auto verts = nlohmann::json::array();
            for (const auto& v : poly.vertices)
                verts.push_back({ v.x, v.y });
            arr.push_back(std::move(verts));
        }
        j["polygons"] = std::move(arr);
    }
    if (!recipe.walls.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& wall : recipe.walls) {
            nlohmann::json w;
            w["axis"] = wall.axis == WallSpec::Axis::Horizontal ? "horizontal" : "vertical";
            w["position"] = wall.position;
            w["thickness"] = wall.thickness;
            w["span_from"] = wall.span_from;
            w["span_to"] = wall.span_to;
            auto gaps = nlohmann::json::array();
            for (const auto& gap : wall.gaps)
                gaps.push_back({ { "at", gap.at }, { "width", gap.width } });
            w["gaps"] = std::move(gaps);
            arr.push_back(std::move(w));
        }
        j["walls"] = std::move(arr);
    }
    if (recipe.blobs.count > 0) {
        j["blobs"] = { { "count", recipe.blobs.count },
            { "min_extent", recipe.blobs.min_extent },
            { "max_extent", recipe.blobs.max_extent },
            { "above_diagonal", recipe.blobs.above_diagonal } };
    }
    return j;
}

MapRecipe load_recipe_file(const std::string& filename)
{
    std::ifstream in(filename);
    if (!in)
        throw RecipeError("cannot open recipe file '" + filename + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw RecipeError(std::string("cannot parse recipe: ") + e.what());
    }
    return recipe_from_json(j);
}

namespace {

    void require_inside(int n, int value, const char* what)
    {
        if (value < 0 || value >= n)
            throw RecipeError(std::string(what) + " out of grid");
    }

    void fill_rect(OccupancyGrid& grid, const RectShape& rect)
    {
        const int n = grid.size();
        if (rect.w < 1 || rect.h < 1)
            throw RecipeError("rectangle extents must be positive");
        require_inside(n, rect.x, "rectangle");
        require_inside(n, rect.y, "rectangle");
        require_inside(n, rect.x + rect.w - 1, "rectangle");
        require_inside(n, rect.y + rect.h - 1, "rectangle");
        for (int y = rect.y; y < rect.y + rect.h; ++y)
            for (int x = rect.x; x < rect.x + rect.w; ++x)
                grid.set_occupied(x, y);
    }

    bool point_in_polygon(const std::vector<GridPoint>& poly, double px, double py)
    {
        bool inside = false;
        const std::size_t count = poly.size();
        for (std::size_t i = 0, j = count - 1; i < count; j = i++) {
            const double xi = poly[i].x, yi = poly[i].y;
            const double xj = poly[j].x, yj = poly[j].y;
            if ((yi > py) != (yj > py)
                && px < (xj - xi) * (py - yi) / (yj - yi) + xi)
                inside = !inside;
        }
        return inside;
    }

    void mark_segment(OccupancyGrid& grid, GridPoint a, GridPoint b)
    {
        // Bresenham; keeps polygon boundaries solid regardless of parity.
        int x = a.x, y = a.y;
        const int dx = std::abs(b.x - a.x), dy = -std::abs(b.y - a.y);
        const int sx = a.x < b.x ? 1 : -1, sy = a.y < b.y ? 1 : -1;
        int err = dx + dy;
        while (true) {
            grid.set_occupied(x, y);
            if (x == b.x && y == b.y)
                break;
            const int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y += sy;
            }
        }
    }

    void fill_polygon(OccupancyGrid& grid, const PolygonShape& shape)
    {
        const int n = grid.size();
        if (shape.vertices.size() < 3)
            throw RecipeError("polygon needs at least 3 vertices");
        int min_x = n, max_x = -1, min_y = n, max_y = -1;
        for (const GridPoint& v : shape.vertices) {
            require_inside(n, v.x, "polygon vertex");
            require_inside(n, v.y, "polygon vertex");
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
            min_y = std::min(min_y, v.y);
            max_y = std::max(max_y, v.y);
        }
        for (int y = min_y; y <= max_y; ++y)
            for (int x = min_x; x <= max_x; ++x)
                if (point_in_polygon(shape.vertices, x, y))
                    grid.set_occupied(x, y);
        for (std::size_t i = 0; i < shape.vertices.size(); ++i)
            mark_segment(grid, shape.vertices[i], shape.vertices[(i + 1) % shape.vertices.size()]);
    }

    void fill_wall(OccupancyGrid& grid, const WallSpec& wall)
    {
        const int n = grid.size();
        if (wall.thickness < 1)
            throw RecipeError("wall thickness must be positive");
        require_inside(n, wall.position, "wall");
        require_inside(n, wall.position + wall.thickness - 1, "wall");
        require_inside(n, wall.span_from, "wall span");
        require_inside(n, wall.span_to, "wall span");
        for (const auto& gap : wall.gaps) {
            if (gap.width < 1)
                throw RecipeError("corridor width must be at least 1");
            require_inside(n, gap.at, "corridor");
            require_inside(n, gap.at + gap.width - 1, "corridor");
        }

        const auto in_gap = [&wall](int along) {
            for (const auto& gap : wall.gaps)
                if (along >= gap.at && along < gap.at + gap.width)
                    return true;
            return false;
        };
        for (int across = wall.position; across < wall.position + wall.thickness; ++across) {
            for (int along = wall.span_from; along <= wall.span_to; ++along) {
                if (in_gap(along))
                    continue;
                if (wall.axis == WallSpec::Axis::Horizontal)
                    grid.set_occupied(along, across);
                else
                    grid.set_occupied(across, along);
            }
        }
    }

    void fill_blobs(OccupancyGrid& grid, const BlobSpec& blobs, std::uint64_t seed)
    {
        const int n = grid.size();
        if (blobs.count == 0)
            return;
        if (blobs.min_extent < 1 || blobs.max_extent < blobs.min_extent)
            throw RecipeError("blob extents must satisfy 1 <= min <= max");
        if (blobs.max_extent >= n)
            throw RecipeError("blob extent out of grid");
        RandomStream rng(seed);
        for (int i = 0; i < blobs.count; ++i) {
            const int span = blobs.max_extent - blobs.min_extent + 1;
            int w = 0, h = 0, x = 0, y = 0;
            do {
                w = blobs.min_extent + rng.next_below(span);
                h = blobs.min_extent + rng.next_below(span);
                x = rng.next_below(n - w + 1);
                y = rng.next_below(n - h + 1);
            } while (blobs.above_diagonal && y + h - 1 < x);
            for (int yy = y; yy < y + h; ++yy)
                for (int xx = x; xx < x + w; ++xx)
                    grid.set_occupied(xx, yy);
        }
    }

} // namespace

OccupancyGrid generate_map(const MapRecipe& recipe)
{
    if (recipe.n < 2)
        throw RecipeError("grid side must be at least 2");
    OccupancyGrid grid(recipe.n, recipe.name);
    switch (recipe.kind) {
    case RecipeKind::Rectangles:
        for (const auto& rect : recipe.rects)
            fill_rect(grid, rect);
        break;
    case RecipeKind::Polygon:
        for (const auto& poly : recipe.polygons)
            fill_polygon(grid, poly);
        break;
    case RecipeKind::NarrowPassage:
        for (const auto& wall : recipe.walls)
            fill_wall(grid, wall);
        break;
    case RecipeKind::RandomBlobs:
        fill_blobs(grid, recipe.blobs, recipe.seed);
        break;
    }
    return grid;
}

} // namespace latticeplan
