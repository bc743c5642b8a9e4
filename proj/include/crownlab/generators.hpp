#pragma once

#include <crownlab/poset.hpp>

#include <cstddef>
#include <cstdint>

namespace crownlab
{
    struct RandomPosetOptions
    {
        std::size_t points = 10;
        /// Points are spread over this many levels; relations only go upward.
        std::size_t levels = 3;
        /// Chance, in percent, that two points on different levels are related.
        unsigned edge_percent = 35;
    };

    /// A connected poset on points "p0", "p1", ..., fully determined by the seed.
    auto random_connected_poset(std::uint64_t seed, RandomPosetOptions options = {}) -> Poset;

    /// A connected poset whose `points` extremal points contain a crown, plus
    /// `middle` non-extremal points (flat when `middle` is zero).
    auto random_flat_with_crown(std::uint64_t seed, std::size_t points, std::size_t middle = 0) -> Poset;

    /// A 2n-crown with pendant extremal points and `middle` non-extremal points.
    /// The crown points are named c0 .. c{2n-1} in cycle order, c0 minimal.
    auto random_crown_with_middle(std::uint64_t seed, std::size_t crown_size, std::size_t extra,
        std::size_t middle) -> Poset;

    /// A connected poset whose extremal points induce a tree, with `middle`
    /// non-extremal points added.
    auto random_tree_with_middle(std::uint64_t seed, std::size_t extremal, std::size_t middle) -> Poset;
}
