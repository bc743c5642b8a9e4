#include <crownlab/error.hpp>
#include <crownlab/oracle.hpp>

#include <vector>

namespace crownlab
{
    namespace
    {
        // Backtracking over maps in a linear extension of the source: every point
        // below x is already placed, so checking lower covers keeps the map monotone.
        class MapSearch
        {
            const Poset & _source;
            const Poset & _target;
            std::vector<PointSet> _allowed;
            bool _surjective;
            OracleBudget _budget;
            std::vector<std::size_t> _order;
            std::vector<std::vector<std::size_t>> _lower_covers;
            std::vector<std::size_t> _image;

        public:
            std::size_t nodes = 0;

            MapSearch(const Poset & source, const Poset & target, std::vector<PointSet> allowed, bool surjective,
                OracleBudget budget)
                : _source(source),
                  _target(target),
                  _allowed(std::move(allowed)),
                  _surjective(surjective),
                  _budget(budget),
                  _order(linear_extension(source)),
                  _lower_covers(source.size()),
                  _image(source.size())
            {
                if (source.size() > budget.max_source_size)
                    throw Error(ErrorCode::BudgetExceeded,
                        std::to_string(source.size()) + " points exceed the oracle limit of "
                            + std::to_string(budget.max_source_size));
                for (auto [lo, hi] : source.covers())
                    _lower_covers[hi].push_back(lo);
            }

            auto run() -> std::optional<std::vector<std::size_t>>
            {
                if (extend(0, PointSet{}))
                    return _image;
                return std::nullopt;
            }

        private:
            auto extend(std::size_t depth, PointSet hit) -> bool
            {
                if (++nodes > _budget.max_maps)
                    throw Error(ErrorCode::BudgetExceeded,
                        "oracle search exceeded " + std::to_string(_budget.max_maps) + " nodes");
                if (_surjective && (_target.all() - hit).size() > _order.size() - depth)
                    return false;
                if (depth == _order.size())
                    return ! _surjective || hit == _target.all();

                auto x = _order[depth];
                auto candidates = _allowed[x];
                for (auto c : _lower_covers[x])
                    candidates &= _target.up_set(_image[c]);
                for (auto t : candidates) {
                    _image[x] = t;
                    if (extend(depth + 1, hit | PointSet::single(t)))
                        return true;
                }
                return false;
            }
        };
    }

    auto oracle_retraction_exists(const Poset & poset, PointSet image, OracleBudget budget) -> OracleResult
    {
        if (image.empty())
            throw Error(ErrorCode::EmptySubset, "retraction onto the empty set");
        std::vector<PointSet> allowed(poset.size(), image & poset.all());
        for (auto r : image)
            allowed[r] = PointSet::single(r);

        MapSearch search{poset, poset, std::move(allowed), false, budget};
        OracleResult result;
        if (auto found = search.run()) {
            result.exists = true;
            result.witness.emplace(poset, poset, std::move(*found));
        }
        result.nodes = search.nodes;
        return result;
    }

    auto oracle_surjective_hom_exists(const Poset & source, const Poset & target, OracleBudget budget) -> OracleResult
    {
        std::vector<PointSet> allowed(source.size(), target.all());
        MapSearch search{source, target, std::move(allowed), true, budget};
        OracleResult result;
        if (auto found = search.run()) {
            result.exists = true;
            result.witness.emplace(source, target, std::move(*found));
        }
        result.nodes = search.nodes;
        return result;
    }

    auto crown_free(const Poset & flat) -> bool
    {
        if (height(flat) > 1)
            throw Error(ErrorCode::NotFlat, "crown_free expects a poset of height at most one");

        // a graph is a forest iff edges = vertices - components
        auto graph = comparability_graph(flat, flat.all());
        std::size_t components = 0;
        PointSet seen;
        for (std::size_t s = 0; s < flat.size(); ++s) {
            if (seen.contains(s))
                continue;
            ++components;
            PointSet frontier = PointSet::single(s);
            seen.insert(s);
            while (! frontier.empty()) {
                PointSet next;
                for (auto u : frontier)
                    next |= graph.adjacent[u] - seen;
                seen |= next;
                frontier = next;
            }
        }
        return graph.edge_count() + components == flat.size();
    }
}
