#pragma once

#include <crownlab/crowns.hpp>
#include <crownlab/poset.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace crownlab
{
    /// R together with, for each member of ℱ(P), the index of the member of
    /// ℱ(R) on the same point names.
    struct ReductionResult
    {
        Poset r;
        std::vector<std::size_t> vertex_bijection;
        int method = 1;
    };

    /// Y = ⋃ℱ(P) plus one fresh atom "#k" per crown F_k, with x < #k for x ∈ L(F_k)
    /// and #k < y for y ∈ U(F_k). Throws EmptyFamily.
    auto reduce_height_method1(const Poset & poset, const CrownFamily & family) -> ReductionResult;

    /// Y = ⋃ℱ(P) plus one point per minimal non-empty intersection of inners,
    /// placed inside every crown whose inner contains it. Throws EmptyFamily.
    auto reduce_height_method2(const Poset & poset, const CrownFamily & family) -> ReductionResult;

    /// The non-empty sets ∩_{F∈𝓜} inner(F), minimal under inclusion.
    auto minimal_inner_intersections(const CrownFamily & family) -> std::vector<PointSet>;

    struct ReductionCheck
    {
        bool height_ok = false;
        bool same_multigraph = false;
        bool pattern_ok = false;
        std::string violation;

        auto ok() const -> bool { return height_ok && same_multigraph && pattern_ok; }
    };

    /// Checks height(R) ≤ 2 and 𝔽(R) = 𝔽(P) as labelled multigraphs. For method 1
    /// the inners of R must be pairwise disjoint singletons; for method 2 every set
    /// of at most `max_subset` crowns must have intersecting inners in P exactly
    /// when it does in R.
    auto check_reduction(const Poset & poset, const CrownFamily & family, const ReductionResult & result,
        std::size_t max_subset = 5) -> ReductionCheck;
}
