#include <crownlab/error.hpp>
#include <crownlab/retraction.hpp>

#include <algorithm>
#include <stdexcept>

namespace crownlab
{
    namespace
    {
        auto extremal_sub(const Poset & poset) -> InducedPoset
        {
            return induced(poset, extremal_decomposition(poset).extremal);
        }

        auto require_flat_target(const Poset & target) -> void
        {
            if (height(target) > 1)
                throw Error(ErrorCode::TargetNotFlat, "target poset has height " + std::to_string(height(target)));
        }

        auto require_defined_on_E(const Poset & poset, const PointMap & f, const InducedPoset & sub) -> void
        {
            if (! (f.source() == sub.poset))
                throw Error(ErrorCode::TargetMismatch, "map must be defined on the extremal points of the poset");
            auto v = classify_map(f);
            if (! v.homomorphism)
                throw Error(ErrorCode::NotAHomomorphism,
                    "map breaks " + poset.name(sub.parent[v.violation->first]) + " ≤ "
                        + poset.name(sub.parent[v.violation->second]));
        }

        auto single(PointSet s) -> std::size_t
        {
            return s.front();
        }

        auto require_retraction_onto(const PointMap & r, PointSet image, const char * who) -> void
        {
            auto v = classify_map(r, PointSet{});
            if (! v.retraction || r.image_set() != image)
                throw std::logic_error(std::string{who} + " produced a map that is not a retraction onto the crown");
        }
    }

    auto template_crown() -> const Poset &
    {
        static const Poset crown = [] {
            std::vector<Generator> below{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
            return Poset{{"a", "b", "v", "w"}, below};
        }();
        return crown;
    }

    auto check_partition_condition(const Poset & poset, const CrownFamily & family, const ExtremalPartition & part)
        -> PartitionVerdict
    {
        auto d = extremal_decomposition(poset);
        if (part.a.empty() || part.b.empty() || part.v.empty() || part.w.empty())
            throw Error(ErrorCode::InvalidPartition, "every class of the partition must be non-empty");
        if (part.a.intersects(part.b) || (part.a | part.b) != d.minimal)
            throw Error(ErrorCode::InvalidPartition, "A, B do not partition the minimal points");
        if (part.v.intersects(part.w) || (part.v | part.w) != d.maximal)
            throw Error(ErrorCode::InvalidPartition, "V, W do not partition the maximal points");

        for (std::size_t f = 0; f < family.size(); ++f) {
            auto pts = family.crowns[f].points();
            if (pts.intersects(part.a) && pts.intersects(part.b) && pts.intersects(part.v) && pts.intersects(part.w))
                return PartitionVerdict{false, f};
        }
        return {};
    }

    auto induced_hom(const Poset & poset, const ExtremalPartition & part) -> PointMap
    {
        auto sub = extremal_sub(poset);
        std::vector<std::size_t> image(sub.poset.size());
        for (std::size_t i = 0; i < image.size(); ++i) {
            auto p = sub.parent[i];
            if (part.a.contains(p))
                image[i] = 0;
            else if (part.b.contains(p))
                image[i] = 1;
            else if (part.v.contains(p))
                image[i] = 2;
            else if (part.w.contains(p))
                image[i] = 3;
            else
                throw Error(ErrorCode::InvalidPartition, "'" + poset.name(p) + "' lies in no class of the partition");
        }
        return PointMap{sub.poset, template_crown(), std::move(image)};
    }

    auto alpha_beta(const Poset & poset, const PointMap & f) -> AlphaBeta
    {
        auto d = extremal_decomposition(poset);
        auto sub = induced(poset, d.extremal);
        if (! (f.source() == sub.poset))
            throw Error(ErrorCode::TargetMismatch, "map must be defined on the extremal points of the poset");

        AlphaBeta ab;
        ab.alpha.resize(poset.size());
        ab.beta.resize(poset.size());
        for (std::size_t x = 0; x < poset.size(); ++x) {
            ab.alpha[x] = f.image_of(sub.to_child(d.minimal & poset.down_set(x)));
            ab.beta[x] = f.image_of(sub.to_child(d.maximal & poset.up_set(x)));
        }
        return ab;
    }

    auto extension_obstructions(const Poset & poset, const PointMap & f) -> PointSet
    {
        auto ab = alpha_beta(poset, f);
        PointSet bad;
        for (std::size_t x = 0; x < poset.size(); ++x)
            if (! ab.alpha[x].intersects(ab.beta[x]) && ab.alpha[x].size() >= 2 && ab.beta[x].size() >= 2)
                bad.insert(x);
        return bad;
    }

    auto extend_to_P(const Poset & poset, const PointMap & f) -> PointMap
    {
        auto d = extremal_decomposition(poset);
        auto sub = induced(poset, d.extremal);
        require_defined_on_E(poset, f, sub);
        require_flat_target(f.target());

        if (auto bad = extension_obstructions(poset, f); ! bad.empty()) {
            auto x = bad.front();
            throw Error(ErrorCode::HypothesisViolated,
                "'" + poset.name(x) + "' sees two lower and two upper images with nothing in common");
        }

        auto ab = alpha_beta(poset, f);
        std::vector<std::size_t> image(poset.size());
        for (std::size_t x = 0; x < poset.size(); ++x) {
            if (auto child = sub.child_of(x))
                image[x] = f(*child);
            else if (ab.alpha[x].size() >= 2)
                image[x] = single(ab.beta[x]);
            else if (ab.beta[x].size() >= 2)
                image[x] = single(ab.alpha[x]);
            else
                image[x] = single(ab.beta[x]);
        }

        PointMap g{poset, f.target(), std::move(image)};
        if (! classify_map(g).homomorphism)
            throw std::logic_error("extension of a homomorphism on E(P) is not a homomorphism");
        return g;
    }

    auto normalize_hom(const PointMap & f) -> PointMap
    {
        const auto & p = f.source();
        const auto & q = f.target();
        auto dp = extremal_decomposition(p), dq = extremal_decomposition(q);

        std::vector<std::size_t> image(p.size());
        for (std::size_t x = 0; x < p.size(); ++x) {
            auto y = f(x);
            if (dp.minimal.contains(x) && ! dq.minimal.contains(y))
                image[x] = (dq.minimal & q.down_set(y)).front();
            else if (dp.maximal.contains(x) && ! dq.maximal.contains(y))
                image[x] = (dq.maximal & q.up_set(y)).front();
            else
                image[x] = y;
        }
        return PointMap{p, q, std::move(image)};
    }

    auto normalize_retraction(const PointMap & retraction) -> PointMap
    {
        const auto & p = retraction.source();
        if (! classify_map(retraction, PointSet{}).retraction)
            throw Error(ErrorCode::NotAHomomorphism, "normalize_retraction needs a retraction");

        auto sub = induced(p, retraction.image_set());
        std::vector<std::size_t> onto(p.size());
        for (std::size_t x = 0; x < p.size(); ++x)
            onto[x] = *sub.child_of(retraction(x));
        auto g = normalize_hom(PointMap{p, sub.poset, std::move(onto)});
        auto result = compose(inclusion_map(sub, p), g);
        require_retraction_onto(result, retraction.image_set(), "normalize_retraction");
        return result;
    }

    auto separating_partition(const Poset & poset, const CrownFamily & family, const FourCrown & crown,
        const CrownAssignment & phi) -> ExtremalPartition
    {
        const auto a = crown.lo[0], b = crown.lo[1], v = crown.hi[0], w = crown.hi[1];
        // a ∉ A0 and b ∉ B0, so a goes to B and b to A; likewise v to W and w to V
        auto d = extremal_decomposition(poset);
        auto classes = separation_classes(poset, family, phi);
        ExtremalPartition part;
        part.a = classes.a0 | PointSet::single(b);
        part.b = d.minimal - part.a;
        part.v = classes.v0 | PointSet::single(w);
        part.w = d.maximal - part.v;
        if (! part.b.contains(a) || ! part.w.contains(v) || classes.b0.intersects(part.a)
            || classes.w0.intersects(part.v))
            throw std::logic_error("partition completion failed to separate the crown");
        return part;
    }

    auto retract_onto_4crown(const Poset & poset, const CrownFamily & family, const FourCrown & given)
        -> std::optional<PointMap>
    {
        auto search = find_C_separating(poset, family, given);
        if (! search.found())
            return std::nullopt;
        auto crown = classify_crown(poset, given.points());

        auto part = separating_partition(poset, family, crown, search.assignment);
        if (! check_partition_condition(poset, family, part).ok)
            throw std::logic_error("partition built from a C-separating homomorphism violates the crown condition");

        auto g = extend_to_P(poset, induced_hom(poset, part));

        // π: template crown → C, chosen so that the composite fixes C pointwise
        std::vector<std::size_t> pi(4, poset.size());
        for (auto c : crown.points())
            pi[g(c)] = c;
        if (std::count(pi.begin(), pi.end(), poset.size()) != 0)
            throw std::logic_error("extension does not map the crown bijectively onto itself");

        std::vector<std::size_t> image(poset.size());
        for (std::size_t x = 0; x < poset.size(); ++x)
            image[x] = pi[g(x)];
        PointMap r{poset, poset, std::move(image)};
        require_retraction_onto(r, crown.points(), "retract_onto_4crown");
        return r;
    }

    auto retract_onto_4crown(const Poset & poset, const FourCrown & crown) -> std::optional<PointMap>
    {
        return retract_onto_4crown(poset, improper_family(poset), crown);
    }

    auto lift_flat_hom(const Poset & poset, const PointMap & f) -> PointMap
    {
        const auto & q = f.target();
        require_flat_target(q);
        if (auto crowns = enumerate_4crowns_in_E(q); ! crowns.empty())
            throw Error(ErrorCode::TargetHas4Crown, "target contains the 4-crown " + crown_label(q, crowns.front()));

        auto sub = extremal_sub(poset);
        require_defined_on_E(poset, f, sub);

        // with no 4-crown in Q, a multi-point α(x) has exactly one upper bound, its supremum
        auto ab = alpha_beta(poset, f);
        for (std::size_t x = 0; x < poset.size(); ++x) {
            if (ab.alpha[x].intersects(ab.beta[x]))
                continue;
            if (ab.alpha[x].size() >= 2) {
                auto bounds = q.all();
                for (auto s : ab.alpha[x])
                    bounds &= q.up_set(s);
                auto least = q.minimal_in(bounds);
                if (least.size() != 1 || ab.beta[x] != least)
                    throw std::logic_error("β(x) differs from {sup α(x)} in a 4-crown-free flat target");
            }
            if (ab.beta[x].size() >= 2) {
                auto bounds = q.all();
                for (auto t : ab.beta[x])
                    bounds &= q.down_set(t);
                auto greatest = q.maximal_in(bounds);
                if (greatest.size() != 1 || ab.alpha[x] != greatest)
                    throw std::logic_error("α(x) differs from {inf β(x)} in a 4-crown-free flat target");
            }
        }
        return extend_to_P(poset, f);
    }

    auto fence_retraction(const Poset & flat, const std::vector<std::size_t> & crown, std::size_t x, std::size_t y)
        -> PointMap
    {
        if (height(flat) > 1)
            throw Error(ErrorCode::NotFlat, "fence retraction needs a flat poset");
        if (! is_connected(flat))
            throw Error(ErrorCode::NotConnected, "fence retraction needs a connected poset");
        if (x >= flat.size() || y >= flat.size() || ! flat.lt(x, y))
            throw Error(ErrorCode::EdgeMissing, "the edge is not a strict relation of the poset");
        if (! is_crown_cycle(flat, crown) || crown.size() < 2 || crown[0] != x || crown[1] != y)
            throw Error(ErrorCode::NotACrown, "expected a crown listed as a cycle starting with the edge");

        auto shortest = minimal_crown_through_edge(flat, x, y);
        if (shortest->size() < crown.size())
            throw Error(ErrorCode::MinimalityViolated,
                "a " + std::to_string(shortest->size()) + "-crown also contains the edge");

        // fence distances from x with the edge (x, y) removed
        auto graph = comparability_graph(flat, flat.all());
        graph.adjacent[x].erase(y);
        graph.adjacent[y].erase(x);
        constexpr auto unreached = std::size_t(-1);
        std::vector<std::size_t> dist(flat.size(), unreached);
        dist[x] = 0;
        PointSet frontier = PointSet::single(x);
        while (! frontier.empty()) {
            PointSet next;
            for (auto u : frontier)
                for (auto t : graph.adjacent[u])
                    if (dist[t] == unreached) {
                        dist[t] = dist[u] + 1;
                        next.insert(t);
                    }
            frontier = next;
        }

        const auto n = crown.size();
        std::vector<std::size_t> at_distance(n, unreached);
        for (auto c : crown) {
            if (dist[c] >= n || at_distance[dist[c]] != unreached)
                throw std::logic_error("crown points do not sit at distinct fence distances");
            at_distance[dist[c]] = c;
        }

        std::vector<std::size_t> image(flat.size());
        for (std::size_t z = 0; z < flat.size(); ++z)
            image[z] = dist[z] < n && at_distance[dist[z]] != unreached ? at_distance[dist[z]] : y;

        PointMap r{flat, flat, std::move(image)};
        require_retraction_onto(r, PointSet::of(crown), "fence_retraction");
        return r;
    }

    auto retract_crown_from_free_edge(const Poset & poset, std::size_t x, std::size_t y) -> CrownRetraction
    {
        auto d = extremal_decomposition(poset);
        if (x >= poset.size() || y >= poset.size() || ! d.minimal.contains(x) || ! d.maximal.contains(y)
            || ! poset.lt(x, y))
            throw Error(ErrorCode::NotAnEdge, "expected an edge from a minimal to a maximal point");

        auto family = improper_family(poset);
        if (family.covers(PointSet::of({x, y})))
            throw Error(ErrorCode::EdgeInImproperCrown,
                poset.name(x) + " < " + poset.name(y) + " lies in an improper 4-crown");

        auto sub = induced(poset, d.extremal);
        auto cx = *sub.child_of(x), cy = *sub.child_of(y);
        auto cycle = minimal_crown_through_edge(sub.poset, cx, cy);
        if (! cycle)
            throw Error(ErrorCode::NoCrownThroughEdge, poset.name(x) + " < " + poset.name(y) + " lies on no crown");

        std::vector<std::size_t> crown;
        for (auto c : *cycle)
            crown.push_back(sub.parent[c]);
        auto crown_points = PointSet::of(crown);

        if (crown.size() == 4) {
            auto r = retract_onto_4crown(poset, family, classify_crown(poset, crown_points));
            if (! r)
                throw std::logic_error("a shortest 4-crown through a free edge is not a retract");
            return CrownRetraction{std::move(crown), std::move(*r)};
        }

        auto fence = fence_retraction(sub.poset, *cycle, cx, cy);
        auto q = induced(poset, crown_points);
        std::vector<std::size_t> onto(sub.poset.size());
        for (std::size_t i = 0; i < onto.size(); ++i)
            onto[i] = *q.child_of(sub.parent[fence(i)]);
        auto lifted = lift_flat_hom(poset, PointMap{sub.poset, q.poset, std::move(onto)});
        auto r = compose(inclusion_map(q, poset), lifted);
        require_retraction_onto(r, crown_points, "retract_crown_from_free_edge");
        return CrownRetraction{std::move(crown), std::move(r)};
    }

    auto crown_edges_in_E(const Poset & poset) -> std::vector<Generator>
    {
        auto d = extremal_decomposition(poset);
        if (d.minimal.intersects(d.maximal))
            return {};
        auto sub = induced(poset, d.extremal);
        std::vector<Generator> edges;
        for (auto x : d.minimal)
            for (auto y : d.maximal & poset.up_set(x))
                if (minimal_crown_through_edge(sub.poset, *sub.child_of(x), *sub.child_of(y)))
                    edges.emplace_back(x, y);
        return edges;
    }

    auto to_string(FppVerdict verdict) -> std::string
    {
        return verdict == FppVerdict::NoFixedPointProperty ? "no-fpp" : "inconclusive";
    }

    auto fpp_screen(const Poset & poset) -> FppScreen
    {
        FppScreen report;
        report.crown_edges = crown_edges_in_E(poset);
        report.extremal_crown_free = report.crown_edges.empty();

        auto family = improper_family(poset);
        const bool height_two = height(poset) == 2;
        for (auto [x, y] : report.crown_edges) {
            auto edge = PointSet::of({x, y});
            if (! family.covers(edge)) {
                auto cert = retract_crown_from_free_edge(poset, x, y);
                report.certificates.push_back(FppCertificate{
                    {x, y}, "edge lies in no improper 4-crown", std::move(cert.crown), std::move(cert.retraction)});
                continue;
            }
            if (! height_two)
                continue;
            bool in_hourglass = false;
            const FourCrown * witness = nullptr;
            for (const auto & c : family.crowns)
                if (edge.subset_of(c.points())) {
                    if (c.kind == CrownKind::Hourglass)
                        in_hourglass = true;
                    else if (! witness)
                        witness = &c;
                }
            if (! in_hourglass && witness)
                report.certificates.push_back(FppCertificate{{x, y},
                    "height two and the edge lies in no hourglass-crown",
                    {witness->lo[0], witness->hi[0], witness->lo[1], witness->hi[1]}, std::nullopt});
        }
        if (! report.certificates.empty())
            report.verdict = FppVerdict::NoFixedPointProperty;
        return report;
    }
}
