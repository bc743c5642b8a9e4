#include <crownlab/crown_graphs.hpp>
#include <crownlab/error.hpp>
#include <crownlab/reduction.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace crownlab
{
    namespace
    {
        auto require_family(const CrownFamily & family) -> void
        {
            if (family.empty())
                throw Error(ErrorCode::EmptyFamily, "height reduction needs at least one improper 4-crown");
        }

        auto fresh_name(const Poset & poset, std::string name) -> std::string
        {
            while (poset.find(name))
                name.insert(0, "#");
            return name;
        }

        auto name_set(const Poset & poset, PointSet points) -> std::vector<std::string>
        {
            std::vector<std::string> names;
            for (auto p : points)
                names.push_back(poset.name(p));
            std::sort(names.begin(), names.end());
            return names;
        }

        /// Builds R on Y ∪ fresh points; `placed[k]` lists the crowns fresh point k sits inside.
        auto assemble(const Poset & poset, const CrownFamily & family, const std::vector<std::string> & fresh,
            const std::vector<std::vector<std::size_t>> & placed, int method) -> ReductionResult
        {
            auto y = family.support();
            std::vector<std::string> names;
            std::vector<std::size_t> slot(poset.size());
            for (auto p : y) {
                slot[p] = names.size();
                names.push_back(poset.name(p));
            }
            std::vector<Generator> below;
            for (auto p : y)
                for (auto q : poset.strict_up_set(p) & y)
                    below.emplace_back(slot[p], slot[q]);
            for (std::size_t k = 0; k < fresh.size(); ++k) {
                auto idx = names.size();
                names.push_back(fresh[k]);
                PointSet lower, upper;
                for (auto f : placed[k]) {
                    lower |= family.crowns[f].lower();
                    upper |= family.crowns[f].upper();
                }
                for (auto x : lower)
                    below.emplace_back(slot[x], idx);
                for (auto x : upper)
                    below.emplace_back(idx, slot[x]);
            }

            ReductionResult result{Poset{std::move(names), below}, {}, method};
            auto reduced = improper_family(result.r);
            for (const auto & c : family.crowns) {
                auto label = name_set(poset, c.points());
                std::size_t match = reduced.size();
                for (std::size_t g = 0; g < reduced.size(); ++g)
                    if (name_set(result.r, reduced.crowns[g].points()) == label)
                        match = g;
                if (match == reduced.size())
                    throw std::logic_error("reduced poset lost the improper crown " + crown_label(poset, c));
                result.vertex_bijection.push_back(match);
            }
            return result;
        }
    }

    auto reduce_height_method1(const Poset & poset, const CrownFamily & family) -> ReductionResult
    {
        require_family(family);
        std::vector<std::string> fresh;
        std::vector<std::vector<std::size_t>> placed;
        for (std::size_t k = 0; k < family.size(); ++k) {
            fresh.push_back(fresh_name(poset, "#" + std::to_string(k + 1)));
            placed.push_back({k});
        }
        return assemble(poset, family, fresh, placed, 1);
    }

    auto minimal_inner_intersections(const CrownFamily & family) -> std::vector<PointSet>
    {
        std::set<std::uint64_t> closed;
        std::vector<PointSet> pending;
        for (const auto & c : family.crowns)
            if (closed.insert(c.inner.bits()).second)
                pending.push_back(c.inner);
        while (! pending.empty()) {
            auto d = pending.back();
            pending.pop_back();
            for (const auto & c : family.crowns) {
                auto meet = d & c.inner;
                if (closed.insert(meet.bits()).second)
                    pending.push_back(meet);
            }
        }

        std::vector<PointSet> minimal;
        for (auto bits : closed) {
            PointSet d{bits};
            if (d.empty())
                continue;
            bool is_min = std::none_of(closed.begin(), closed.end(), [&](std::uint64_t other) {
                PointSet e{other};
                return ! e.empty() && e != d && e.subset_of(d);
            });
            if (is_min)
                minimal.push_back(d);
        }
        return minimal;
    }

    auto reduce_height_method2(const Poset & poset, const CrownFamily & family) -> ReductionResult
    {
        require_family(family);
        std::vector<std::string> fresh;
        std::vector<std::vector<std::size_t>> placed;
        for (auto d : minimal_inner_intersections(family)) {
            std::string label;
            for (auto p : d)
                label += (label.empty() ? "" : ",") + poset.name(p);
            fresh.push_back(fresh_name(poset, "#{" + label + "}"));
            std::vector<std::size_t> inside;
            for (std::size_t f = 0; f < family.size(); ++f)
                if (d.subset_of(family.crowns[f].inner))
                    inside.push_back(f);
            placed.push_back(std::move(inside));
        }
        return assemble(poset, family, fresh, placed, 2);
    }

    auto check_reduction(const Poset & poset, const CrownFamily & family, const ReductionResult & result,
        std::size_t max_subset) -> ReductionCheck
    {
        ReductionCheck check;
        const auto & r = result.r;
        auto reduced = improper_family(r);
        const auto & bij = result.vertex_bijection;
        check.height_ok = height(r) <= 2;
        if (! check.height_ok)
            check.violation = "reduced poset has height " + std::to_string(height(r));

        check.same_multigraph = reduced.size() == family.size() && bij.size() == family.size();
        for (std::size_t f = 0; check.same_multigraph && f < family.size(); ++f)
            if (bij[f] >= reduced.size()
                || name_set(poset, family.crowns[f].points()) != name_set(r, reduced.crowns[bij[f]].points()))
                check.same_multigraph = false;
        if (check.same_multigraph) {
            auto gp = build_F_graph(poset, family);
            auto gr = build_F_graph(r, reduced);
            for (std::size_t f = 0; f < family.size(); ++f)
                for (std::size_t h = 0; h < family.size(); ++h)
                    if (gp.l_adj[f][h] != gr.l_adj[bij[f]][bij[h]] || gp.u_adj[f][h] != gr.u_adj[bij[f]][bij[h]])
                        check.same_multigraph = false;
        }
        if (! check.same_multigraph && check.violation.empty())
            check.violation = "improper-crown multigraphs differ";

        check.pattern_ok = check.same_multigraph;
        if (check.pattern_ok && result.method == 1) {
            // every inner of R is a single fresh atom, and no two crowns share one
            PointSet used;
            for (const auto & c : reduced.crowns) {
                if (c.inner.size() != 1 || used.intersects(c.inner))
                    check.pattern_ok = false;
                used |= c.inner;
            }
            if (! check.pattern_ok)
                check.violation = "method 1 inners are not pairwise disjoint singletons";
        }
        else if (check.pattern_ok) {
            std::vector<std::size_t> chosen;
            std::function<void(std::size_t, PointSet, PointSet)> walk = [&](std::size_t from, PointSet in_p,
                                                                          PointSet in_r) {
                if (! chosen.empty() && in_p.empty() != in_r.empty()) {
                    check.pattern_ok = false;
                    return;
                }
                if (chosen.size() == max_subset)
                    return;
                for (std::size_t f = from; f < family.size() && check.pattern_ok; ++f) {
                    chosen.push_back(f);
                    walk(f + 1, in_p & family.crowns[f].inner, in_r & reduced.crowns[bij[f]].inner);
                    chosen.pop_back();
                }
            };
            walk(0, poset.all(), r.all());
            if (! check.pattern_ok && check.violation.empty())
                check.violation = "inner intersection pattern differs";
        }
        return check;
    }
}
