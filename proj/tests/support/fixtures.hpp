#pragma once

#include <crownlab/poset.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixtures
{
    using crownlab::Poset;
    using Pairs = std::vector<std::pair<std::string, std::string>>;

    inline auto make(std::vector<std::string> points, const Pairs & pairs) -> Poset
    {
        return Poset::from_named(std::move(points), pairs);
    }

    /// The 4-crown a, b < v, w.
    inline auto c4() -> Poset
    {
        return make({"a", "b", "v", "w"}, {{"a", "v"}, {"a", "w"}, {"b", "v"}, {"b", "w"}});
    }

    /// C4 with one point x between {a, b} and {v, w}.
    inline auto hg() -> Poset
    {
        return make({"a", "b", "v", "w", "x"}, {{"a", "x"}, {"b", "x"}, {"x", "v"}, {"x", "w"}});
    }

    /// C4 with two incomparable points between {a, b} and {v, w}.
    inline auto two_mid() -> Poset
    {
        return make({"a", "b", "v", "w", "x", "y"},
            {{"a", "x"}, {"b", "x"}, {"x", "v"}, {"x", "w"}, {"a", "y"}, {"b", "y"}, {"y", "v"}, {"y", "w"}});
    }

    inline auto k33_pairs() -> Pairs
    {
        Pairs pairs;
        for (auto lo : {"a", "b", "c"})
            for (auto hi : {"v", "w", "u"})
                pairs.emplace_back(lo, hi);
        return pairs;
    }

    /// K3,3 with ab|vw and bc|wu made improper by midpoints.
    inline auto w2() -> Poset
    {
        auto pairs = k33_pairs();
        for (auto [lo, hi] : Pairs{{"a", "m1"}, {"b", "m1"}, {"m1", "v"}, {"m1", "w"}, {"b", "m2"}, {"c", "m2"},
                 {"m2", "w"}, {"m2", "u"}})
            pairs.emplace_back(lo, hi);
        return make({"a", "b", "c", "v", "w", "u", "m1", "m2"}, pairs);
    }

    /// K3,3 with four improper 4-crowns (bc|vw, ab|uw, ac|uv, bc|uw) whose
    /// multigraph is complete, and every extremal edge inside one of them.
    inline auto p9_like() -> Poset
    {
        auto pairs = k33_pairs();
        auto mid = [&](const char * m, const char * l1, const char * l2, const char * u1, const char * u2) {
            pairs.emplace_back(l1, m);
            pairs.emplace_back(l2, m);
            pairs.emplace_back(m, u1);
            pairs.emplace_back(m, u2);
        };
        mid("m1", "b", "c", "v", "w");
        mid("m2", "a", "b", "u", "w");
        mid("m3", "a", "c", "u", "v");
        mid("m4", "b", "c", "u", "w");
        return make({"a", "b", "c", "v", "w", "u", "m1", "m2", "m3", "m4"}, pairs);
    }

    /// The 6-crown x0 < y0 > x1 < y1 > x2 < y2 > x0.
    inline auto k6() -> Poset
    {
        return make({"x0", "x1", "x2", "y0", "y1", "y2"},
            {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x0", "y2"}});
    }

    /// A 6-crown with two pendant points.
    inline auto flat6() -> Poset
    {
        return make({"x0", "x1", "x2", "y0", "y1", "y2", "p", "q"},
            {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x0", "y2"}, {"x0", "p"},
                {"q", "y1"}});
    }

    /// The 6-crown with a middle point above x0 and below y0, y2.
    inline auto k6_mid() -> Poset
    {
        return make({"x0", "x1", "x2", "y0", "y1", "y2", "m"},
            {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x0", "y2"}, {"x0", "m"},
                {"m", "y0"}, {"m", "y2"}});
    }

    inline auto chain3() -> Poset
    {
        return make({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
    }

    /// The fence p0 < p1 > p2 < p3 > p4.
    inline auto fence5() -> Poset
    {
        return make({"p0", "p1", "p2", "p3", "p4"}, {{"p0", "p1"}, {"p2", "p1"}, {"p2", "p3"}, {"p4", "p3"}});
    }

    struct Named
    {
        std::string name;
        Poset poset;
    };

    inline auto all() -> std::vector<Named>
    {
        return {{"c4", c4()}, {"hg", hg()}, {"twomid", two_mid()}, {"w2", w2()}, {"p9like", p9_like()},
            {"k6", k6()}, {"flat6", flat6()}, {"k6mid", k6_mid()}, {"chain3", chain3()}, {"fence5", fence5()}};
    }
}
