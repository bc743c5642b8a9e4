#include <crownlab/crowns.hpp>
#include <crownlab/error.hpp>

#include <algorithm>
#include <cassert>
#include <limits>

namespace crownlab
{
    auto to_string(CrownKind kind) -> std::string
    {
        switch (kind) {
        case CrownKind::Proper: return "proper";
        case CrownKind::Improper: return "improper";
        case CrownKind::Hourglass: return "hourglass";
        }
        return "?";
    }

    auto crown_label(const Poset & poset, const FourCrown & crown) -> std::string
    {
        return "{" + poset.name(crown.lo[0]) + "," + poset.name(crown.lo[1]) + "," + poset.name(crown.hi[0]) + ","
            + poset.name(crown.hi[1]) + "}";
    }

    namespace
    {
        auto kind_of(const Poset & poset, PointSet inner) -> CrownKind
        {
            if (inner.empty())
                return CrownKind::Proper;
            for (auto x : inner)
                if (inner.subset_of(poset.down_set(x) | poset.up_set(x)))
                    return CrownKind::Hourglass;
            return CrownKind::Improper;
        }

        auto make_crown(const Poset & poset, std::size_t a, std::size_t b, std::size_t v, std::size_t w) -> FourCrown
        {
            FourCrown c;
            c.lo = {a, b};
            c.hi = {v, w};
            c.inner = poset.interval(a, v) & poset.interval(b, w);
            assert(c.inner == (poset.interval(a, w) & poset.interval(b, v)));
            c.kind = kind_of(poset, c.inner);
            return c;
        }
    }

    auto enumerate_4crowns_in_E(const Poset & poset) -> std::vector<FourCrown>
    {
        auto d = extremal_decomposition(poset);
        std::vector<FourCrown> result;
        for (auto a : d.minimal)
            for (auto b : d.minimal)
                if (a < b) {
                    // maximal points above both a and b
                    auto common = poset.up_set(a) & poset.up_set(b) & d.maximal;
                    for (auto v : common)
                        for (auto w : common)
                            if (v < w)
                                result.push_back(make_crown(poset, a, b, v, w));
                }
        return result;
    }

    auto classify_crown(const Poset & poset, PointSet points) -> FourCrown
    {
        if (points.size() != 4)
            throw Error(ErrorCode::NotACrown, "a 4-crown has exactly four points, got " + std::to_string(points.size()));

        auto lower = poset.minimal_in(points), upper = poset.maximal_in(points);
        if (lower.size() != 2 || upper.size() != 2 || lower.intersects(upper))
            throw Error(ErrorCode::NotACrown, "the points do not split into two lower and two upper points");

        for (auto x : lower)
            for (auto y : upper)
                if (! poset.lt(x, y))
                    throw Error(ErrorCode::NotACrown,
                        "missing comparability " + poset.name(x) + " < " + poset.name(y));

        std::vector<std::size_t> lo(lower.begin(), lower.end()), hi(upper.begin(), upper.end());
        return make_crown(poset, lo[0], lo[1], hi[0], hi[1]);
    }

    auto CrownFamily::support() const -> PointSet
    {
        PointSet s;
        for (const auto & c : crowns)
            s |= c.points();
        return s;
    }

    auto CrownFamily::covers(PointSet points) const -> bool
    {
        return std::any_of(crowns.begin(), crowns.end(), [&](const FourCrown & c) { return points.subset_of(c.points()); });
    }

    auto improper_family(const Poset & poset) -> CrownFamily
    {
        CrownFamily fam;
        fam.containing.resize(poset.size());
        for (auto & c : enumerate_4crowns_in_E(poset))
            if (c.improper()) {
                for (auto p : c.points())
                    fam.containing[p].push_back(fam.crowns.size());
                fam.crowns.push_back(c);
            }
        return fam;
    }

    auto relevant_points(const Poset & poset, const CrownFamily & family) -> RelevantSet
    {
        RelevantSet r;
        for (const auto & c : family.crowns)
            r.relevant |= c.points() | c.inner;
        r.reduced_carrier = extremal_decomposition(poset).extremal | r.relevant;
        return r;
    }

    auto relevant_points(const Poset & poset) -> RelevantSet
    {
        return relevant_points(poset, improper_family(poset));
    }

    auto minimal_crown_through_edge(const Poset & poset, PointSet within, std::size_t x, std::size_t y)
        -> std::optional<std::vector<std::size_t>>
    {
        if (height(poset, within) > 1)
            throw Error(ErrorCode::NotFlat, "shortest crowns are searched in flat posets only");
        if (! within.contains(x) || ! within.contains(y) || ! poset.lt(x, y))
            throw Error(ErrorCode::NotAnEdge, poset.name(x) + " < " + poset.name(y) + " is not an edge");

        auto graph = comparability_graph(poset, within);
        graph.adjacent[x].erase(y);
        graph.adjacent[y].erase(x);

        constexpr auto unreached = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> dist(poset.size(), unreached);
        dist[y] = 0;
        PointSet frontier = PointSet::single(y);
        while (! frontier.empty() && dist[x] == unreached) {
            PointSet next;
            for (auto u : frontier)
                for (auto t : graph.adjacent[u])
                    if (dist[t] == unreached) {
                        dist[t] = dist[u] + 1;
                        next.insert(t);
                    }
            frontier = next;
        }
        if (dist[x] == unreached)
            return std::nullopt;

        // walk back from x towards y, always through the least-index predecessor
        std::vector<std::size_t> path{x};
        for (auto cur = x; cur != y;) {
            for (auto t : graph.adjacent[cur])
                if (dist[t] + 1 == dist[cur]) {
                    cur = t;
                    break;
                }
            path.push_back(cur);
        }
        // path runs x … y; the crown is read x, y, then back along the path
        std::vector<std::size_t> cycle{x, y};
        for (auto it = path.rbegin() + 1; it != path.rend() - 1; ++it)
            cycle.push_back(*it);
        return cycle;
    }

    auto minimal_crown_through_edge(const Poset & poset, std::size_t x, std::size_t y)
        -> std::optional<std::vector<std::size_t>>
    {
        return minimal_crown_through_edge(poset, poset.all(), x, y);
    }

    auto is_crown_cycle(const Poset & poset, const std::vector<std::size_t> & cycle) -> bool
    {
        const auto n = cycle.size();
        if (n < 4 || PointSet::of(cycle).size() != n)
            return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool neighbours = j == i + 1 || (i == 0 && j == n - 1);
                if (poset.comparable(cycle[i], cycle[j]) != neighbours)
                    return false;
            }
        return true;
    }
}
