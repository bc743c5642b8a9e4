#pragma once

#include <crownlab/poset.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crownlab
{
    enum class CrownKind
    {
        Proper,
        Improper,
        Hourglass
    };

    auto to_string(CrownKind kind) -> std::string;

    /// A 4-crown: lower points a < b and upper points v < w (by carrier index),
    /// each lower point strictly below each upper point.
    struct FourCrown
    {
        std::array<std::size_t, 2> lo;
        std::array<std::size_t, 2> hi;
        PointSet inner;
        CrownKind kind = CrownKind::Proper;

        auto points() const -> PointSet { return PointSet::of({lo[0], lo[1], hi[0], hi[1]}); }
        auto lower() const -> PointSet { return PointSet::of({lo[0], lo[1]}); }
        auto upper() const -> PointSet { return PointSet::of({hi[0], hi[1]}); }
        auto improper() const -> bool { return kind != CrownKind::Proper; }

        friend auto operator==(const FourCrown &, const FourCrown &) -> bool = default;
    };

    /// Human-readable label, e.g. "{a,b,v,w}".
    auto crown_label(const Poset & poset, const FourCrown & crown) -> std::string;

    /// Every 4-crown with both lower points in L(P) and both upper points in U(P),
    /// ordered lexicographically by (lo, hi).
    auto enumerate_4crowns_in_E(const Poset & poset) -> std::vector<FourCrown>;

    /// Validates that the four points form a 4-crown in `poset` and computes its
    /// inner and kind. Throws NotACrown naming the offending pair.
    auto classify_crown(const Poset & poset, PointSet points) -> FourCrown;

    /// The improper 4-crowns of E(P), with a per-point membership index.
    struct CrownFamily
    {
        std::vector<FourCrown> crowns;
        /// For every carrier point, indices into `crowns` of members containing it.
        std::vector<std::vector<std::size_t>> containing;

        auto size() const -> std::size_t { return crowns.size(); }
        auto empty() const -> bool { return crowns.empty(); }
        /// Union of the members' point sets.
        auto support() const -> PointSet;
        /// True if some member contains every point of `points`.
        auto covers(PointSet points) const -> bool;
    };

    auto improper_family(const Poset & poset) -> CrownFamily;

    struct RelevantSet
    {
        /// Union of F ∪ inner(F) over the family.
        PointSet relevant;
        /// E(P) ∪ relevant; the carrier left once the irrelevant middle points go.
        PointSet reduced_carrier;
    };

    auto relevant_points(const Poset & poset, const CrownFamily & family) -> RelevantSet;
    auto relevant_points(const Poset & poset) -> RelevantSet;

    /// Shortest crown containing the edge x < y in a flat poset, as a cycle
    /// starting x, y, ... . Throws NotFlat or NotAnEdge; nullopt if the edge lies
    /// on no cycle of the comparability graph.
    auto minimal_crown_through_edge(const Poset & poset, std::size_t x, std::size_t y)
        -> std::optional<std::vector<std::size_t>>;

    /// Same, restricted to the induced sub-poset on `within` (which must be flat).
    auto minimal_crown_through_edge(const Poset & poset, PointSet within, std::size_t x, std::size_t y)
        -> std::optional<std::vector<std::size_t>>;

    /// True if `cycle` (in order) is an induced cycle of length ≥ 4 of the
    /// comparability graph, i.e. a crown.
    auto is_crown_cycle(const Poset & poset, const std::vector<std::size_t> & cycle) -> bool;
}
