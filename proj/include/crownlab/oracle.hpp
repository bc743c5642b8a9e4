#pragma once

#include <crownlab/poset.hpp>

#include <cstddef>
#include <optional>

namespace crownlab
{
    struct OracleBudget
    {
        std::size_t max_source_size = 14;
        /// Cap on search nodes (partial maps extended).
        std::size_t max_maps = 20'000'000;
    };

    struct OracleResult
    {
        bool exists = false;
        std::optional<PointMap> witness;
        std::size_t nodes = 0;
    };

    /// Exhaustive search for a retraction of P onto the sub-poset on `image`.
    /// The witness is a self-map of P. Throws BudgetExceeded or EmptySubset.
    auto oracle_retraction_exists(const Poset & poset, PointSet image, OracleBudget budget = {}) -> OracleResult;

    /// Exhaustive search for a surjective order homomorphism P → Q.
    /// Throws BudgetExceeded.
    auto oracle_surjective_hom_exists(const Poset & source, const Poset & target, OracleBudget budget = {})
        -> OracleResult;

    /// True iff the comparability graph of a flat poset has no cycle.
    /// Throws NotFlat.
    auto crown_free(const Poset & flat) -> bool;
}
