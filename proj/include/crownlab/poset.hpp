#pragma once

#include <crownlab/point_set.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crownlab
{
    using Generator = std::pair<std::size_t, std::size_t>;

    /// A finite poset over an indexed carrier. The order is stored reflexively
    /// and transitively closed, as one down-set and one up-set word per point.
    /// Point indices follow the order in which the names were listed.
    class Poset
    {
        std::vector<std::string> _names;
        std::unordered_map<std::string, std::size_t> _index;
        std::vector<PointSet> _down;
        std::vector<PointSet> _up;

    public:
        /// Builds the closure of the generators, each read as "first strictly
        /// below second". Throws EmptyCarrier, TooManyPoints, DuplicatePoint,
        /// UnknownPoint or CycleDetected.
        Poset(std::vector<std::string> names, std::span<const Generator> below);

        static auto from_named(std::vector<std::string> names,
            std::span<const std::pair<std::string, std::string>> below) -> Poset;

        auto size() const -> std::size_t { return _names.size(); }
        auto all() const -> PointSet { return PointSet::first(size()); }
        auto name(std::size_t i) const -> const std::string & { return _names.at(i); }
        auto names() const -> const std::vector<std::string> & { return _names; }
        auto find(std::string_view name) const -> std::optional<std::size_t>;
        auto index_of(std::string_view name) const -> std::size_t;

        auto leq(std::size_t x, std::size_t y) const -> bool { return _up[x].contains(y); }
        auto lt(std::size_t x, std::size_t y) const -> bool { return x != y && leq(x, y); }
        auto comparable(std::size_t x, std::size_t y) const -> bool { return leq(x, y) || leq(y, x); }

        auto down_set(std::size_t y) const -> PointSet { return _down[y]; }
        auto up_set(std::size_t y) const -> PointSet { return _up[y]; }
        auto strict_down_set(std::size_t y) const -> PointSet { return _down[y] - PointSet::single(y); }
        auto strict_up_set(std::size_t y) const -> PointSet { return _up[y] - PointSet::single(y); }
        auto interval(std::size_t x, std::size_t y) const -> PointSet { return _up[x] & _down[y]; }

        /// Covering pairs (Hasse reduction) in lexicographic index order.
        auto covers() const -> std::vector<Generator>;

        /// Points of `subset` that are minimal (maximal) in the induced sub-poset.
        auto minimal_in(PointSet subset) const -> PointSet;
        auto maximal_in(PointSet subset) const -> PointSet;

        friend auto operator==(const Poset & a, const Poset & b) -> bool
        {
            return a._names == b._names && a._up == b._up;
        }
    };

    struct ExtremalDecomposition
    {
        PointSet minimal;
        PointSet maximal;
        PointSet extremal;
        PointSet middle;
    };

    auto extremal_decomposition(const Poset & poset) -> ExtremalDecomposition;

    struct OrderQueries
    {
        PointSet down_set;
        PointSet up_set;
        PointSet interval;
    };

    /// down_set(y), up_set(y) and [x,y], looked up by name.
    auto order_queries(const Poset & poset, std::string_view x, std::string_view y) -> OrderQueries;

    /// Undirected comparability graph of an induced sub-poset, indexed by the
    /// parent's point indices; adjacency of points outside `vertices` is empty.
    struct ComparabilityGraph
    {
        PointSet vertices;
        std::vector<PointSet> adjacent;

        auto edge_count() const -> std::size_t;
    };

    auto comparability_graph(const Poset & poset, PointSet vertices) -> ComparabilityGraph;

    auto is_connected(const Poset & poset, PointSet within) -> bool;
    auto is_connected(const Poset & poset) -> bool;

    /// Number of points in a longest chain, minus one.
    auto height(const Poset & poset, PointSet within) -> std::size_t;
    auto height(const Poset & poset) -> std::size_t;

    /// Points in an order compatible with the poset (ties by index).
    auto linear_extension(const Poset & poset) -> std::vector<std::size_t>;

    struct StructureSummary
    {
        std::size_t points;
        bool connected;
        std::size_t height;
        std::size_t minimal_count;
        std::size_t maximal_count;
    };

    auto structure_queries(const Poset & poset) -> StructureSummary;

    /// An induced sub-poset together with the parent index of each of its points.
    struct InducedPoset
    {
        Poset poset;
        std::vector<std::size_t> parent;

        /// Index in `poset` of a parent index, if the point was kept.
        auto child_of(std::size_t parent_index) const -> std::optional<std::size_t>;
        /// Maps a parent-indexed subset into child indices; points not kept are dropped.
        auto to_child(PointSet parent_points) const -> PointSet;
        auto to_parent(PointSet child_points) const -> PointSet;
    };

    auto induced(const Poset & poset, PointSet subset) -> InducedPoset;

    /// A total map between two carriers.
    class PointMap
    {
        Poset _source;
        Poset _target;
        std::vector<std::size_t> _image;

    public:
        PointMap(Poset source, Poset target, std::vector<std::size_t> image);

        auto source() const -> const Poset & { return _source; }
        auto target() const -> const Poset & { return _target; }
        auto operator()(std::size_t x) const -> std::size_t { return _image[x]; }
        auto images() const -> std::span<const std::size_t> { return _image; }
        auto image_of(PointSet points) const -> PointSet;
        auto image_set() const -> PointSet { return image_of(_source.all()); }

        friend auto operator==(const PointMap &, const PointMap &) -> bool = default;
    };

    auto identity_map(const Poset & poset) -> PointMap;

    /// The inclusion of an induced sub-poset into its parent.
    auto inclusion_map(const InducedPoset & sub, const Poset & parent) -> PointMap;

    /// outer ∘ inner. Throws TargetMismatch unless inner's target is outer's source.
    auto compose(const PointMap & outer, const PointMap & inner) -> PointMap;

    struct MapVerdict
    {
        bool homomorphism = false;
        bool strict = false;
        bool surjective = false;
        bool retraction = false;
        /// First pair x ≤ y (in source indices) whose images are out of order.
        std::optional<Generator> violation;
    };

    /// Verdicts are recomputed from scratch on every call. `strict_on` names the
    /// source points whose induced strict relations must map to strict relations.
    auto classify_map(const PointMap & map, PointSet strict_on) -> MapVerdict;
    auto classify_map(const PointMap & map) -> MapVerdict;
}
