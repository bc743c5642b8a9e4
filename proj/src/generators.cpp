#include <crownlab/error.hpp>
#include <crownlab/generators.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace crownlab
{
    namespace
    {
        // Modulo draws keep output identical across standard libraries.
        class Draw
        {
            std::mt19937_64 _engine;

        public:
            explicit Draw(std::uint64_t seed) : _engine(seed) {}

            auto below(std::size_t n) -> std::size_t { return static_cast<std::size_t>(_engine() % n); }
            auto percent(unsigned p) -> bool { return _engine() % 100 < p; }
        };

        auto numbered(const std::string & prefix, std::size_t n) -> std::vector<std::string>
        {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i)
                names.push_back(prefix + std::to_string(i));
            return names;
        }

        struct Builder
        {
            std::vector<std::string> names;
            std::vector<Generator> below;
            /// Extremal points related to each point from below and from above.
            std::vector<PointSet> lo, hi;

            auto add(std::string name) -> std::size_t
            {
                names.push_back(std::move(name));
                lo.emplace_back();
                hi.emplace_back();
                return names.size() - 1;
            }

            auto relate(std::size_t x, std::size_t y) -> void
            {
                below.emplace_back(x, y);
                hi[x].insert(y);
                lo[y].insert(x);
            }

            // Middle points sit above some minimal points and below maximal points
            // already above all of them, so the extremal order is left unchanged.
            auto add_middle(Draw & draw, std::size_t count) -> void
            {
                PointSet minimal, maximal;
                for (std::size_t i = 0; i < names.size(); ++i)
                    (lo[i].empty() ? minimal : maximal).insert(i);
                std::vector<std::size_t> mins(minimal.begin(), minimal.end());

                std::vector<std::size_t> middles;
                for (std::size_t m = 0; m < count; ++m) {
                    std::optional<std::size_t> under;
                    PointSet lower, upper;
                    if (! middles.empty() && draw.percent(40)) {
                        under = middles[draw.below(middles.size())];
                        lower = lo[*under];
                        upper = hi[*under];
                    }
                    else {
                        auto a = mins[draw.below(mins.size())];
                        auto b = mins[draw.below(mins.size())];
                        lower = PointSet::single(a);
                        upper = hi[a] & maximal;
                        if (draw.percent(50) && ! (upper & hi[b]).empty()) {
                            lower.insert(b);
                            upper &= hi[b];
                        }
                    }
                    PointSet kept;
                    for (auto u : upper)
                        if (kept.empty() || draw.percent(50))
                            kept.insert(u);

                    auto x = add("m" + std::to_string(m));
                    if (under)
                        below.emplace_back(*under, x);
                    else
                        for (auto l : lower)
                            below.emplace_back(l, x);
                    for (auto u : kept)
                        below.emplace_back(x, u);
                    lo[x] = lower;
                    hi[x] = kept;
                    middles.push_back(x);
                }
            }

            auto build() const -> Poset { return Poset{names, below}; }
        };
    }

    auto random_connected_poset(std::uint64_t seed, RandomPosetOptions options) -> Poset
    {
        if (options.points == 0 || options.levels == 0)
            throw Error(ErrorCode::EmptyCarrier, "random poset needs points and levels");
        Draw draw{seed};
        const auto n = options.points;
        std::vector<std::size_t> level(n);
        for (auto & l : level)
            l = draw.below(options.levels);

        std::vector<Generator> below;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (level[x] < level[y] && draw.percent(options.edge_percent))
                    below.emplace_back(x, y);

        // join components by relating a random pair across them
        std::vector<std::size_t> comp(n);
        for (std::size_t i = 0; i < n; ++i)
            comp[i] = i;
        auto root = [&](std::size_t i) {
            while (comp[i] != i)
                i = comp[i] = comp[comp[i]];
            return i;
        };
        for (auto [x, y] : below)
            comp[root(x)] = root(y);
        for (std::size_t i = 1; i < n; ++i) {
            if (root(i) == root(0))
                continue;
            auto j = draw.below(n);
            while (root(j) == root(i))
                j = (j + 1) % n;
            if (level[i] < level[j] || (level[i] == level[j] && i < j))
                below.emplace_back(i, j);
            else
                below.emplace_back(j, i);
            comp[root(i)] = root(j);
        }
        return Poset{numbered("p", n), below};
    }

    auto random_flat_with_crown(std::uint64_t seed, std::size_t points, std::size_t middle) -> Poset
    {
        if (points < 4)
            throw Error(ErrorCode::TooFewExtremalPoints, "a crown needs at least four points");
        Draw draw{seed};
        auto cycle = 4 + 2 * draw.below((points - 2) / 2);
        Builder b;
        std::vector<bool> is_min;
        for (std::size_t i = 0; i < cycle; ++i) {
            b.add("c" + std::to_string(i));
            is_min.push_back(i % 2 == 0);
        }
        for (std::size_t i = 0; i < cycle; i += 2) {
            b.relate(i, i + 1);
            b.relate(i, (i + cycle - 1) % cycle);
        }
        for (std::size_t i = cycle; i < points; ++i) {
            auto x = b.add("x" + std::to_string(i - cycle));
            bool minimal = draw.percent(50);
            is_min.push_back(minimal);
            std::vector<std::size_t> other;
            for (std::size_t y = 0; y < x; ++y)
                if (is_min[y] != minimal)
                    other.push_back(y);
            PointSet linked = PointSet::single(other[draw.below(other.size())]);
            for (auto y : other)
                if (draw.percent(20))
                    linked.insert(y);
            for (auto y : linked) {
                if (minimal)
                    b.relate(x, y);
                else
                    b.relate(y, x);
            }
        }
        b.add_middle(draw, middle);
        return b.build();
    }

    auto random_crown_with_middle(std::uint64_t seed, std::size_t crown_size, std::size_t extra,
        std::size_t middle) -> Poset
    {
        if (crown_size < 4 || crown_size % 2 != 0)
            throw Error(ErrorCode::NotACrown, "crown size must be even and at least four");
        Draw draw{seed};
        Builder b;
        for (std::size_t i = 0; i < crown_size; ++i)
            b.add("c" + std::to_string(i));
        for (std::size_t i = 0; i < crown_size; i += 2) {
            b.relate(i, i + 1);
            b.relate(i, (i + crown_size - 1) % crown_size);
        }
        // pendant points keep the crown a retract of the extremal part
        for (std::size_t e = 0; e < extra; ++e) {
            auto x = b.add("e" + std::to_string(e));
            auto y = draw.below(x);
            bool y_minimal = ! b.hi[y].empty();
            if (y_minimal)
                b.relate(y, x);
            else
                b.relate(x, y);
        }
        b.add_middle(draw, middle);
        return b.build();
    }

    auto random_tree_with_middle(std::uint64_t seed, std::size_t extremal, std::size_t middle) -> Poset
    {
        if (extremal < 2)
            throw Error(ErrorCode::TooFewExtremalPoints, "need at least two extremal points");
        Draw draw{seed};
        Builder b;
        b.add("t0");
        b.add("t1");
        b.relate(0, 1);
        for (std::size_t i = 2; i < extremal; ++i) {
            auto x = b.add("t" + std::to_string(i));
            auto y = draw.below(x);
            if (! b.hi[y].empty())
                b.relate(y, x);
            else
                b.relate(x, y);
        }
        b.add_middle(draw, middle);
        return b.build();
    }
}
