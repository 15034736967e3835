#include "latticeplan/objective.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace latticeplan;

namespace {

TreeTuple staircase_tuple(int n)
{
    std::vector<int> entries(static_cast<std::size_t>(n), 1);
    entries.back() = 0;
    return TreeTuple(std::move(entries));
}

} // namespace

TEST_CASE("path_length on the worked examples")
{
    CHECK(path_length(tuple_to_path(TreeTuple({ 1, 0 }), DiagonalSide::Above))
        == doctest::Approx(2.0));
    CHECK(path_length(tuple_to_path(TreeTuple({ 1, 1, 0 }), DiagonalSide::Above))
        == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK(path_length(tuple_to_path(staircase_tuple(50), DiagonalSide::Above))
        == doctest::Approx(2.0 + 48.0 * std::sqrt(2.0)).epsilon(1e-12));
    // side does not change lengths
    CHECK(path_length(tuple_to_path(TreeTuple({ 2, 0, 1, 0 }), DiagonalSide::Below))
        == path_length(tuple_to_path(TreeTuple({ 2, 0, 1, 0 }), DiagonalSide::Above)));
}

TEST_CASE("path lengths of valid paths stay inside the staircase/L bracket")
{
    std::mt19937_64 seeds(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(seeds() % 80);
        const OccupancyGrid grid(n);
        RandomStream rng(seeds());
        SamplerConfig config;
        config.alpha = static_cast<double>(trial % 9);
        const auto path = generate_path(grid, config, rng);
        REQUIRE(path.has_value());
        const double length = path_length(*path);
        CHECK(length >= 2.0 + (n - 2) * std::sqrt(2.0) - 1e-9);
        CHECK(length <= 2.0 * (n - 1) + 1e-9);
    }
}

TEST_CASE("evaluate returns lengths, counts the budget, refuses past it")
{
    const OccupancyGrid grid(50);
    SamplerConfig sampler;
    PathObjective objective(grid, sampler, 5, 42);

    CHECK(objective.penalty() == doctest::Approx(500.0));
    for (int i = 0; i < 5; ++i) {
        const auto fitness = objective.evaluate(1.0);
        REQUIRE(fitness.has_value());
        CHECK(*fitness < objective.penalty());
        CHECK(objective.budget().used() == i + 1);
    }
    CHECK(objective.budget().exhausted());
    CHECK_FALSE(objective.evaluate(1.0).has_value());
    CHECK(objective.budget().used() == 5); // refusal does not consume
    CHECK(objective.history().size() == 5);
}

TEST_CASE("blocked maps earn the penalty and no incumbent")
{
    const int n = 20;
    OccupancyGrid wall(n);
    for (int y = 0; y < n; ++y)
        wall.set_occupied(n - 2, y);

    SamplerConfig sampler;
    PathObjective objective(wall, sampler, 10, 7);
    for (int i = 0; i < 10; ++i) {
        const auto fitness = objective.evaluate(1.0 + i * 0.3);
        REQUIRE(fitness.has_value());
        CHECK(*fitness == doctest::Approx(10.0 * n));
    }
    CHECK_FALSE(objective.incumbent().has_value());
}

TEST_CASE("the objective is noisy across evaluations at the same alpha")
{
    const OccupancyGrid grid(50);
    SamplerConfig sampler;
    PathObjective objective(grid, sampler, 2, 5);
    const auto first = objective.evaluate(1.0);
    const auto second = objective.evaluate(1.0);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(*first != *second);
}

TEST_CASE("incumbent length is non-increasing and strictly collision-free")
{
    OccupancyGrid grid(30);
    for (int k = 0; k < 6; ++k)
        grid.set_occupied(5 + 2 * k, 20 + k % 3);

    SamplerConfig sampler;
    PathObjective objective(grid, sampler, 200, 99);
    double last = objective.penalty();
    for (int i = 0; i < 200; ++i) {
        objective.evaluate(0.5 + (i % 20) * 0.2);
        if (objective.incumbent()) {
            CHECK(objective.incumbent()->length <= last + 1e-12);
            last = objective.incumbent()->length;
        }
    }
    REQUIRE(objective.incumbent().has_value());
    CHECK(path_collision_free(grid, objective.incumbent()->path));
    CHECK(objective.incumbent()->length < objective.penalty());
}

TEST_CASE("in loose collision mode the incumbent is still strictly verified")
{
    // One obstacle buried inside a tall first rise: the single-node probe
    // accepts such paths, the incumbent filter must not.
    const int n = 12;
    OccupancyGrid grid(n);
    grid.set_occupied(0, 2);

    SamplerConfig sampler;
    sampler.strict_collision = false;
    PathObjective objective(grid, sampler, 500, 3);
    for (int i = 0; i < 500; ++i)
        objective.evaluate(0.05); // small alpha favors tall first rises
    if (objective.incumbent())
        CHECK(path_collision_free(grid, objective.incumbent()->path));
}
