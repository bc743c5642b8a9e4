#include <crownlab/crowns.hpp>
#include <crownlab/generators.hpp>
#include <crownlab/oracle.hpp>

#include <doctest.h>

using namespace crownlab;

TEST_CASE("generators are deterministic")
{
    CHECK(random_connected_poset(42) == random_connected_poset(42));
    CHECK(random_flat_with_crown(7, 9, 2) == random_flat_with_crown(7, 9, 2));
    CHECK(random_crown_with_middle(3, 6, 2, 2) == random_crown_with_middle(3, 6, 2, 2));
    CHECK(random_tree_with_middle(11, 8, 3) == random_tree_with_middle(11, 8, 3));
    bool differs = false;
    for (std::uint64_t s = 1; s < 10 && ! differs; ++s)
        differs = ! (random_connected_poset(0) == random_connected_poset(s));
    CHECK(differs);
}

TEST_CASE("random connected posets")
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        RandomPosetOptions opt{5 + s % 10, 2 + s % 4, 20 + static_cast<unsigned>(s % 60)};
        auto p = random_connected_poset(s, opt);
        CHECK(p.size() == opt.points);
        CHECK(is_connected(p));
        CHECK(p.name(0) == "p0");
    }
}

TEST_CASE("flat posets with a crown")
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto points = 6 + s % 6;
        auto p = random_flat_with_crown(s, points);
        CHECK(p.size() == points);
        CHECK(is_connected(p));
        CHECK(height(p) <= 2);
        CHECK_FALSE(crown_free(p));

        auto q = random_flat_with_crown(s, points, 1 + s % 3);
        CHECK(q.size() == points + 1 + s % 3);
        auto d = extremal_decomposition(q);
        CHECK(d.extremal.size() == points);
        CHECK(is_connected(q));
        CHECK_FALSE(crown_free(induced(q, d.extremal).poset));
    }
}

TEST_CASE("crowns with middle points")
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto n = 2 * (2 + s % 4);
        auto p = random_crown_with_middle(s, n, s % 3, s % 4);
        CHECK(is_connected(p));
        std::vector<std::size_t> cycle;
        for (std::size_t i = 0; i < n; ++i)
            cycle.push_back(p.index_of("c" + std::to_string(i)));
        CHECK(is_crown_cycle(p, cycle));
        auto d = extremal_decomposition(p);
        CHECK(d.minimal.contains(cycle[0]));
        CHECK(d.middle.size() == s % 4);
    }
}

TEST_CASE("trees with middle points")
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto p = random_tree_with_middle(s, 2 + s % 10, s % 4);
        auto d = extremal_decomposition(p);
        CHECK(d.extremal.size() == 2 + s % 10);
        CHECK(is_connected(p));
        CHECK(crown_free(induced(p, d.extremal).poset));
    }
}
