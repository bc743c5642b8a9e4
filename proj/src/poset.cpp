#include <crownlab/error.hpp>
#include <crownlab/poset.hpp>

#include <algorithm>
#include <unordered_set>

namespace crownlab
{
    Poset::Poset(std::vector<std::string> names, std::span<const Generator> below) :
        _names(std::move(names))
    {
        if (_names.empty())
            throw Error(ErrorCode::EmptyCarrier, "a poset needs at least one point");
        if (_names.size() > max_points)
            throw Error(ErrorCode::TooManyPoints,
                std::to_string(_names.size()) + " points, at most " + std::to_string(max_points) + " supported");

        for (std::size_t i = 0; i < _names.size(); ++i)
            if (! _index.emplace(_names[i], i).second)
                throw Error(ErrorCode::DuplicatePoint, "point '" + _names[i] + "' listed twice");

        const auto n = _names.size();
        _up.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            _up[i] = PointSet::single(i);
        for (auto [x, y] : below) {
            if (x >= n || y >= n)
                throw Error(ErrorCode::UnknownPoint, "generator refers to index outside the carrier");
            if (x == y)
                throw Error(ErrorCode::CycleDetected, "'" + _names[x] + "' < '" + _names[x] + "'");
            _up[x].insert(y);
        }

        // iterated squaring of the relation until it is transitively closed
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<PointSet> squared(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (auto j : _up[i])
                    squared[i] |= _up[j];
                if (squared[i] != _up[i])
                    changed = true;
            }
            _up = std::move(squared);
        }

        _down.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto j : _up[i])
                _down[j].insert(i);

        for (std::size_t i = 0; i < n; ++i)
            for (auto j : _up[i] & _down[i])
                if (j != i)
                    throw Error(ErrorCode::CycleDetected,
                        "'" + _names[i] + "' and '" + _names[j] + "' lie below each other");
    }

    auto Poset::from_named(std::vector<std::string> names,
        std::span<const std::pair<std::string, std::string>> below) -> Poset
    {
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < names.size(); ++i)
            index.emplace(names[i], i);

        std::vector<Generator> gens;
        gens.reserve(below.size());
        for (const auto & [x, y] : below) {
            auto ix = index.find(x), iy = index.find(y);
            if (ix == index.end())
                throw Error(ErrorCode::UnknownPoint, "'" + x + "' is not a listed point");
            if (iy == index.end())
                throw Error(ErrorCode::UnknownPoint, "'" + y + "' is not a listed point");
            gens.emplace_back(ix->second, iy->second);
        }
        return Poset{std::move(names), gens};
    }

    auto Poset::find(std::string_view name) const -> std::optional<std::size_t>
    {
        auto it = _index.find(std::string{name});
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto Poset::index_of(std::string_view name) const -> std::size_t
    {
        if (auto i = find(name))
            return *i;
        throw Error(ErrorCode::UnknownPoint, "'" + std::string{name} + "' is not a point of the poset");
    }

    auto Poset::covers() const -> std::vector<Generator>
    {
        std::vector<Generator> result;
        for (std::size_t x = 0; x < size(); ++x)
            for (auto y : strict_up_set(x)) {
                // y covers x iff nothing lies strictly between them
                if ((strict_up_set(x) & strict_down_set(y)).empty())
                    result.emplace_back(x, y);
            }
        return result;
    }

    auto Poset::minimal_in(PointSet subset) const -> PointSet
    {
        PointSet result;
        for (auto x : subset)
            if ((strict_down_set(x) & subset).empty())
                result.insert(x);
        return result;
    }

    auto Poset::maximal_in(PointSet subset) const -> PointSet
    {
        PointSet result;
        for (auto x : subset)
            if ((strict_up_set(x) & subset).empty())
                result.insert(x);
        return result;
    }

    auto extremal_decomposition(const Poset & poset) -> ExtremalDecomposition
    {
        ExtremalDecomposition d;
        d.minimal = poset.minimal_in(poset.all());
        d.maximal = poset.maximal_in(poset.all());
        d.extremal = d.minimal | d.maximal;
        d.middle = poset.all() - d.extremal;
        return d;
    }

    auto order_queries(const Poset & poset, std::string_view x, std::string_view y) -> OrderQueries
    {
        auto ix = poset.index_of(x), iy = poset.index_of(y);
        return OrderQueries{poset.down_set(iy), poset.up_set(iy), poset.interval(ix, iy)};
    }

    auto ComparabilityGraph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto v : vertices)
            twice += adjacent[v].size();
        return twice / 2;
    }

    auto comparability_graph(const Poset & poset, PointSet vertices) -> ComparabilityGraph
    {
        if (vertices.empty())
            throw Error(ErrorCode::EmptySubset, "comparability graph of the empty set");
        ComparabilityGraph g{vertices, std::vector<PointSet>(poset.size())};
        for (auto x : vertices)
            g.adjacent[x] = (poset.down_set(x) | poset.up_set(x)) & (vertices - PointSet::single(x));
        return g;
    }

    auto is_connected(const Poset & poset, PointSet within) -> bool
    {
        if (within.empty())
            return false;
        PointSet reached = PointSet::single(within.front()), frontier = reached;
        while (! frontier.empty()) {
            PointSet next;
            for (auto x : frontier)
                next |= (poset.down_set(x) | poset.up_set(x)) & within;
            frontier = next - reached;
            reached |= next;
        }
        return reached == within;
    }

    auto is_connected(const Poset & poset) -> bool
    {
        return is_connected(poset, poset.all());
    }

    auto linear_extension(const Poset & poset) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> order;
        order.reserve(poset.size());
        PointSet placed;
        while (order.size() < poset.size()) {
            for (auto x : poset.all() - placed)
                if (poset.strict_down_set(x).subset_of(placed)) {
                    order.push_back(x);
                    placed.insert(x);
                    break;
                }
        }
        return order;
    }

    auto height(const Poset & poset, PointSet within) -> std::size_t
    {
        std::vector<std::size_t> longest(poset.size(), 0);
        std::size_t best = 0;
        for (auto x : linear_extension(poset)) {
            if (! within.contains(x))
                continue;
            for (auto y : poset.strict_down_set(x) & within)
                longest[x] = std::max(longest[x], longest[y] + 1);
            best = std::max(best, longest[x]);
        }
        return best;
    }

    auto height(const Poset & poset) -> std::size_t
    {
        return height(poset, poset.all());
    }

    auto structure_queries(const Poset & poset) -> StructureSummary
    {
        auto d = extremal_decomposition(poset);
        return StructureSummary{poset.size(), is_connected(poset), height(poset), d.minimal.size(), d.maximal.size()};
    }

    auto InducedPoset::child_of(std::size_t parent_index) const -> std::optional<std::size_t>
    {
        auto it = std::lower_bound(parent.begin(), parent.end(), parent_index);
        if (it == parent.end() || *it != parent_index)
            return std::nullopt;
        return static_cast<std::size_t>(it - parent.begin());
    }

    auto InducedPoset::to_child(PointSet parent_points) const -> PointSet
    {
        PointSet result;
        for (auto p : parent_points)
            if (auto c = child_of(p))
                result.insert(*c);
        return result;
    }

    auto InducedPoset::to_parent(PointSet child_points) const -> PointSet
    {
        PointSet result;
        for (auto c : child_points)
            result.insert(parent[c]);
        return result;
    }

    auto induced(const Poset & poset, PointSet subset) -> InducedPoset
    {
        if (subset.empty())
            throw Error(ErrorCode::EmptySubset, "induced sub-poset of the empty set");
        std::vector<std::size_t> parent(subset.begin(), subset.end());
        std::vector<std::string> names;
        names.reserve(parent.size());
        for (auto p : parent)
            names.push_back(poset.name(p));
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < parent.size(); ++i)
            for (std::size_t j = 0; j < parent.size(); ++j)
                if (poset.lt(parent[i], parent[j]))
                    gens.emplace_back(i, j);
        return InducedPoset{Poset{std::move(names), gens}, std::move(parent)};
    }

    PointMap::PointMap(Poset source, Poset target, std::vector<std::size_t> image) :
        _source(std::move(source)),
        _target(std::move(target)),
        _image(std::move(image))
    {
        if (_image.size() != _source.size())
            throw Error(ErrorCode::TargetMismatch, "map is not total on its source");
        for (auto y : _image)
            if (y >= _target.size())
                throw Error(ErrorCode::TargetMismatch, "map sends a point outside its target");
    }

    auto PointMap::image_of(PointSet points) const -> PointSet
    {
        PointSet result;
        for (auto x : points)
            result.insert(_image[x]);
        return result;
    }

    auto identity_map(const Poset & poset) -> PointMap
    {
        std::vector<std::size_t> image(poset.size());
        for (std::size_t i = 0; i < image.size(); ++i)
            image[i] = i;
        return PointMap{poset, poset, std::move(image)};
    }

    auto inclusion_map(const InducedPoset & sub, const Poset & parent) -> PointMap
    {
        return PointMap{sub.poset, parent, sub.parent};
    }

    auto compose(const PointMap & outer, const PointMap & inner) -> PointMap
    {
        if (! (inner.target() == outer.source()))
            throw Error(ErrorCode::TargetMismatch, "composed maps do not share the middle poset");
        std::vector<std::size_t> image(inner.source().size());
        for (std::size_t x = 0; x < image.size(); ++x)
            image[x] = outer(inner(x));
        return PointMap{inner.source(), outer.target(), std::move(image)};
    }

    auto classify_map(const PointMap & map, PointSet strict_on) -> MapVerdict
    {
        const auto & p = map.source();
        const auto & q = map.target();
        MapVerdict v;

        v.homomorphism = true;
        for (std::size_t x = 0; x < p.size() && v.homomorphism; ++x)
            for (auto y : p.up_set(x))
                if (! q.leq(map(x), map(y))) {
                    v.homomorphism = false;
                    v.violation = Generator{x, y};
                    break;
                }

        v.strict = v.homomorphism;
        for (auto x : strict_on)
            for (auto y : p.strict_up_set(x) & strict_on)
                if (! q.lt(map(x), map(y)))
                    v.strict = false;

        v.surjective = map.image_set() == q.all();

        if (v.homomorphism && p == q) {
            v.retraction = true;
            for (std::size_t x = 0; x < p.size(); ++x)
                if (map(map(x)) != map(x))
                    v.retraction = false;
        }
        return v;
    }

    auto classify_map(const PointMap & map) -> MapVerdict
    {
        return classify_map(map, map.source().all());
    }
}
