#include <crownlab/error.hpp>
#include <crownlab/separating.hpp>

#include <algorithm>
#include <bit>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace crownlab
{
    namespace
    {
        using DomainMask = std::uint8_t;

        constexpr DomainMask all_values = 0xff;

        auto bit(CVertex s) -> DomainMask
        {
            return static_cast<DomainMask>(1u << s.index());
        }

        auto class_mask(VertexClass k) -> DomainMask
        {
            DomainMask m = 0;
            for (auto s : all_cvertices())
                if (in_class(s, k))
                    m |= bit(s);
            return m;
        }

        auto three_point_mask() -> DomainMask
        {
            DomainMask m = 0;
            for (auto s : three_point_cvertices())
                m |= bit(s);
            return m;
        }

        struct Compatibility
        {
            std::array<DomainMask, 8> l{}, u{};
        };

        auto compatibility() -> const Compatibility &
        {
            static const Compatibility c = [] {
                Compatibility r;
                for (auto s : all_cvertices())
                    for (auto t : all_cvertices()) {
                        if (l_edge(s, t))
                            r.l[s.index()] |= bit(t);
                        if (u_edge(s, t))
                            r.u[s.index()] |= bit(t);
                    }
                return r;
            }();
            return c;
        }

        /// Backtracking with forward checking over the connected components of
        /// 𝔽(P); constraints are the two edge relations plus per-variable domains.
        class AssignmentSearch
        {
            const FMultigraph & _graph;
            std::vector<CVertex> _values;
            std::size_t _nodes = 0;

            auto search(std::size_t depth, const std::vector<std::size_t> & order, std::vector<DomainMask> domains,
                CrownAssignment & result) -> bool
            {
                if (depth == order.size())
                    return true;
                const auto f = order[depth];
                const auto & compat = compatibility();
                for (auto s : _values) {
                    if (! (domains[f] & bit(s)))
                        continue;
                    ++_nodes;
                    auto next = domains;
                    next[f] = bit(s);
                    bool wiped = false;
                    for (std::size_t k = depth + 1; k < order.size() && ! wiped; ++k) {
                        auto g = order[k];
                        if (_graph.l_adj[f][g])
                            next[g] &= compat.l[s.index()];
                        if (_graph.u_adj[f][g])
                            next[g] &= compat.u[s.index()];
                        wiped = next[g] == 0;
                    }
                    if (wiped)
                        continue;
                    if (search(depth + 1, order, std::move(next), result)) {
                        result[f] = s;
                        return true;
                    }
                }
                return false;
            }

        public:
            AssignmentSearch(const FMultigraph & graph, std::vector<CVertex> values) :
                _graph(graph),
                _values(std::move(values))
            {
            }

            auto nodes() const -> std::size_t { return _nodes; }

            auto solve(const std::vector<DomainMask> & domains) -> std::optional<CrownAssignment>
            {
                const auto n = _graph.vertex_count;
                for (auto d : domains)
                    if (d == 0)
                        return std::nullopt;

                CrownAssignment result(n);
                std::vector<bool> seen(n, false);
                for (std::size_t root = 0; root < n; ++root) {
                    if (seen[root])
                        continue;
                    std::vector<std::size_t> component{root};
                    seen[root] = true;
                    for (std::size_t i = 0; i < component.size(); ++i)
                        for (std::size_t g = 0; g < n; ++g)
                            if (! seen[g] && (_graph.l_adj[component[i]][g] || _graph.u_adj[component[i]][g])) {
                                seen[g] = true;
                                component.push_back(g);
                            }

                    // decided variables first, then decreasing degree, then index
                    std::vector<std::size_t> degree(n, 0);
                    for (auto f : component)
                        degree[f] = _graph.degree(f);
                    std::sort(component.begin(), component.end(), [&](std::size_t p, std::size_t q) {
                        bool fixed_p = std::has_single_bit(domains[p]), fixed_q = std::has_single_bit(domains[q]);
                        if (fixed_p != fixed_q)
                            return fixed_p;
                        if (degree[p] != degree[q])
                            return degree[p] > degree[q];
                        return p < q;
                    });

                    if (! search(0, component, domains, result))
                        return std::nullopt;
                }
                return result;
            }
        };

        auto value_order(SearchDomain domain) -> std::vector<CVertex>
        {
            const auto & three = three_point_cvertices();
            std::vector<CVertex> values(three.begin(), three.end());
            if (domain == SearchDomain::Full)
                for (auto s : {cv::av, cv::aw, cv::bv, cv::bw})
                    values.push_back(s);
            return values;
        }

        auto initial_domain(SearchDomain domain) -> DomainMask
        {
            return domain == SearchDomain::Full ? all_values : three_point_mask();
        }

        auto unary_domains(const CrownFamily & family, const SeparationWitness & wit, DomainMask base)
            -> std::vector<DomainMask>
        {
            const DomainMask not_a = static_cast<DomainMask>(~class_mask(VertexClass::A));
            const DomainMask not_b = static_cast<DomainMask>(~class_mask(VertexClass::B));
            const DomainMask not_v = static_cast<DomainMask>(~class_mask(VertexClass::V));
            const DomainMask not_w = static_cast<DomainMask>(~class_mask(VertexClass::W));
            std::vector<DomainMask> domains(family.size(), base);
            for (std::size_t f = 0; f < family.size(); ++f) {
                auto pts = family.crowns[f].points();
                if (pts.contains(wit.x))
                    domains[f] &= not_a;
                if (pts.contains(wit.x_prime))
                    domains[f] &= not_b;
                if (pts.contains(wit.y))
                    domains[f] &= not_v;
                if (pts.contains(wit.y_prime))
                    domains[f] &= not_w;
            }
            return domains;
        }

        /// The points of C carrying the roles of `s`.
        auto read_in_crown(CVertex s, const FourCrown & crown) -> PointSet
        {
            PointSet pts;
            if (s.has(Role::A))
                pts.insert(crown.lo[0]);
            if (s.has(Role::B))
                pts.insert(crown.lo[1]);
            if (s.has(Role::V))
                pts.insert(crown.hi[0]);
            if (s.has(Role::W))
                pts.insert(crown.hi[1]);
            return pts;
        }

        auto require_crown_in_E(const Poset & poset, const FourCrown & crown) -> FourCrown
        {
            auto d = extremal_decomposition(poset);
            for (auto p : crown.lo)
                if (p >= poset.size() || ! d.minimal.contains(p))
                    throw Error(ErrorCode::CrownNotInE, "lower crown point is not a minimal point of the poset");
            for (auto p : crown.hi)
                if (p >= poset.size() || ! d.maximal.contains(p))
                    throw Error(ErrorCode::CrownNotInE, "upper crown point is not a maximal point of the poset");
            // recompute inner and kind from the poset itself
            auto checked = classify_crown(poset, crown.points());
            if (checked.lo != crown.lo || checked.hi != crown.hi)
                throw Error(ErrorCode::CrownNotInE, "crown roles are not listed in carrier order");
            return checked;
        }

        auto ensure_sound(const Poset & poset, const CrownFamily & family, const SearchResult & result) -> void
        {
            if (! result.found())
                return;
            auto v = verify_separating(poset, family, result.assignment, *result.witness);
            if (! v.ok)
                throw std::logic_error("separating search produced an invalid assignment: " + v.violation);
        }
    }

    auto anchored_witness(const FourCrown & crown) -> SeparationWitness
    {
        return SeparationWitness{crown.lo[0], crown.lo[1], crown.hi[0], crown.hi[1]};
    }

    auto to_string(SearchStatus status) -> std::string
    {
        switch (status) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::NotFound: return "NotFound";
        case SearchStatus::CrownImproper: return "CrownImproper";
        }
        return "?";
    }

    auto is_multigraph_homomorphism(const FMultigraph & graph, const CrownAssignment & phi) -> bool
    {
        for (const auto & e : graph.l_edges)
            if (! l_edge(phi[e.first], phi[e.second]))
                return false;
        for (const auto & e : graph.u_edges)
            if (! u_edge(phi[e.first], phi[e.second]))
                return false;
        return true;
    }

    auto verify_separating(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi,
        const SeparationWitness & wit) -> SeparationVerdict
    {
        if (phi.size() != family.size())
            return {false, "assignment is not total on the family"};
        if (wit.x == wit.x_prime || wit.y == wit.y_prime)
            return {false, "witness points are not distinct"};
        auto d = extremal_decomposition(poset);
        if (! d.minimal.contains(wit.x) || ! d.minimal.contains(wit.x_prime) || ! d.maximal.contains(wit.y)
            || ! d.maximal.contains(wit.y_prime))
            return {false, "witness points are not extremal in the right places"};

        for (std::size_t f = 0; f < family.size(); ++f) {
            auto s = phi[f];
            if (s.size() < 2 || s.size() > 3 || (s.lower() == 0) || (s.upper() == 0))
                return {false, crown_label(poset, family.crowns[f]) + " is sent outside ℭ"};
        }

        for (std::size_t f = 0; f < family.size(); ++f)
            for (std::size_t g = f + 1; g < family.size(); ++g) {
                const auto & cf = family.crowns[f];
                const auto & cg = family.crowns[g];
                if (cf.lower().intersects(cg.lower()) && ! l_edge(phi[f], phi[g]))
                    return {false, "L-edge " + crown_label(poset, cf) + " – " + crown_label(poset, cg) + " not preserved"};
                if (cf.upper().intersects(cg.upper()) && ! u_edge(phi[f], phi[g]))
                    return {false, "U-edge " + crown_label(poset, cf) + " – " + crown_label(poset, cg) + " not preserved"};
            }

        for (std::size_t f = 0; f < family.size(); ++f) {
            auto pts = family.crowns[f].points();
            auto label = crown_label(poset, family.crowns[f]);
            if (pts.contains(wit.x) && in_class(phi[f], VertexClass::A))
                return {false, label + " contains " + poset.name(wit.x) + " but is sent into class A"};
            if (pts.contains(wit.x_prime) && in_class(phi[f], VertexClass::B))
                return {false, label + " contains " + poset.name(wit.x_prime) + " but is sent into class B"};
            if (pts.contains(wit.y) && in_class(phi[f], VertexClass::V))
                return {false, label + " contains " + poset.name(wit.y) + " but is sent into class V"};
            if (pts.contains(wit.y_prime) && in_class(phi[f], VertexClass::W))
                return {false, label + " contains " + poset.name(wit.y_prime) + " but is sent into class W"};
        }
        return {};
    }

    auto separation_classes(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi)
        -> SeparationClasses
    {
        (void)poset;
        SeparationClasses c;
        for (std::size_t f = 0; f < family.size(); ++f) {
            const auto & crown = family.crowns[f];
            if (in_class(phi[f], VertexClass::A))
                c.a0 |= crown.lower();
            if (in_class(phi[f], VertexClass::B))
                c.b0 |= crown.lower();
            if (in_class(phi[f], VertexClass::V))
                c.v0 |= crown.upper();
            if (in_class(phi[f], VertexClass::W))
                c.w0 |= crown.upper();
        }
        return c;
    }

    auto acceptance_witness(const Poset & poset, const CrownFamily & family, const CrownAssignment & phi)
        -> std::optional<SeparationWitness>
    {
        auto d = extremal_decomposition(poset);
        auto c = separation_classes(poset, family, phi);

        auto pick = [](PointSet first_pool, PointSet second_pool) -> std::optional<std::pair<std::size_t, std::size_t>> {
            for (auto p : first_pool)
                for (auto q : second_pool)
                    if (p != q)
                        return std::pair{p, q};
            return std::nullopt;
        };
        auto lower = pick(d.minimal - c.a0, d.minimal - c.b0);
        auto upper = pick(d.maximal - c.v0, d.maximal - c.w0);
        if (! lower || ! upper)
            return std::nullopt;
        return SeparationWitness{lower->first, lower->second, upper->first, upper->second};
    }

    auto find_C_separating(const Poset & poset, const CrownFamily & family, const FourCrown & given,
        CSearchOptions options) -> SearchResult
    {
        auto crown = require_crown_in_E(poset, given);
        SearchResult result;
        if (crown.improper()) {
            result.status = SearchStatus::CrownImproper;
            return result;
        }

        auto wit = anchored_witness(crown);
        auto domains = unary_domains(family, wit, initial_domain(options.domain));

        if (options.pin)
            for (auto s : three_point_cvertices()) {
                auto pts = read_in_crown(s, crown);
                // with witness (a,b,v,w) the members of ℱ(P)_S are forced onto the swapped vertex
                auto target = role_swap(s, true, true);
                for (std::size_t f = 0; f < family.size(); ++f)
                    if (pts.subset_of(family.crowns[f].points()))
                        domains[f] &= bit(target);
            }

        auto graph = build_F_graph(poset, family);
        AssignmentSearch search(graph, value_order(options.domain));
        auto solution = search.solve(domains);
        result.stats.nodes = search.nodes();
        if (solution) {
            result.status = SearchStatus::Found;
            result.assignment = std::move(*solution);
            result.witness = wit;
        }
        ensure_sound(poset, family, result);
        return result;
    }

    auto find_separating(const Poset & poset, const CrownFamily & family, SearchDomain domain) -> SearchResult
    {
        auto d = extremal_decomposition(poset);
        if (d.minimal.size() < 2 || d.maximal.size() < 2)
            throw Error(ErrorCode::TooFewExtremalPoints, "need at least two minimal and two maximal points");

        // points lying in no improper crown are interchangeable as witnesses
        auto support = family.support();
        auto candidates = [&](PointSet pool) {
            std::vector<std::size_t> out;
            std::size_t spare = 0;
            for (auto p : pool)
                if (support.contains(p) || spare++ < 2)
                    out.push_back(p);
            return out;
        };
        auto lows = candidates(d.minimal), highs = candidates(d.maximal);

        auto graph = build_F_graph(poset, family);
        AssignmentSearch search(graph, value_order(domain));
        SearchResult result;
        for (std::size_t i = 0; i < lows.size(); ++i)
            for (std::size_t j = i + 1; j < lows.size(); ++j)
                for (std::size_t k = 0; k < highs.size(); ++k)
                    for (std::size_t l = k + 1; l < highs.size(); ++l) {
                        SeparationWitness wit{lows[i], lows[j], highs[k], highs[l]};
                        auto solution = search.solve(unary_domains(family, wit, initial_domain(domain)));
                        if (! solution)
                            continue;
                        result.status = SearchStatus::Found;
                        result.assignment = std::move(*solution);
                        result.witness = acceptance_witness(poset, family, result.assignment);
                        if (! result.witness)
                            throw std::logic_error("separating assignment without an acceptance witness");
                        result.stats.nodes = search.nodes();
                        ensure_sound(poset, family, result);
                        return result;
                    }
        result.stats.nodes = search.nodes();
        return result;
    }

    auto clique_fast_paths(const Poset & poset, const CrownFamily & family, const FourCrown & given)
        -> std::optional<SearchResult>
    {
        auto crown = require_crown_in_E(poset, given);
        SearchResult result;
        if (crown.improper()) {
            result.status = SearchStatus::CrownImproper;
            result.stats.fast_path = "improper";
            return result;
        }
        auto wit = anchored_witness(crown);

        // a point of C in no improper crown: constant map onto the 3-point vertex avoiding its class
        const std::array<std::pair<std::size_t, CVertex>, 4> free_point_images{
            {{crown.lo[0], cv::avw}, {crown.lo[1], cv::bvw}, {crown.hi[0], cv::abv}, {crown.hi[1], cv::abw}}};
        for (auto [point, image] : free_point_images)
            if (family.containing[point].empty()) {
                result.status = SearchStatus::Found;
                result.assignment.assign(family.size(), image);
                result.witness = wit;
                result.stats.fast_path = "constant";
                ensure_sound(poset, family, result);
                return result;
            }

        auto graph = build_F_graph(poset, family);
        if (! graph.complete || family.empty())
            return std::nullopt;

        // complete 𝔽(P): decided by a crown edge lying in no improper crown
        result.stats.fast_path = "clique";
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                auto x = crown.lo[i], y = crown.hi[j];
                if (family.covers(PointSet::of({x, y})))
                    continue;
                // free edge {a,v}: F ∋ a ↦ abv, otherwise avw; other edges by the role swaps
                auto hit = role_swap(cv::abv, i == 1, j == 1);
                auto miss = role_swap(cv::avw, i == 1, j == 1);
                result.status = SearchStatus::Found;
                result.assignment.resize(family.size());
                for (std::size_t f = 0; f < family.size(); ++f)
                    result.assignment[f] = family.crowns[f].points().contains(x) ? hit : miss;
                result.witness = wit;
                ensure_sound(poset, family, result);
                return result;
            }
        result.status = SearchStatus::NotFound;
        return result;
    }

    auto pinned_normal_form(const CrownAssignment & phi, const FourCrown & crown)
        -> std::pair<CrownAssignment, SeparationWitness>
    {
        CrownAssignment psi(phi.size());
        for (std::size_t f = 0; f < phi.size(); ++f)
            psi[f] = role_swap(phi[f], true, true);
        return {psi, SeparationWitness{crown.lo[1], crown.lo[0], crown.hi[1], crown.hi[0]}};
    }

    auto check_separating_invariants(const Poset & poset, const CrownFamily & family, const FourCrown & crown,
        const CrownAssignment & phi) -> std::vector<std::string>
    {
        std::vector<std::string> violations;
        for (std::size_t f = 0; f < family.size(); ++f) {
            auto pts = family.crowns[f].points();
            if (crown.lower().subset_of(pts) && phi[f] != cv::abv && phi[f] != cv::abw)
                violations.push_back(crown_label(poset, family.crowns[f]) + " holds a,b but is sent to " + phi[f].label());
            if (crown.upper().subset_of(pts) && phi[f] != cv::avw && phi[f] != cv::bvw)
                violations.push_back(crown_label(poset, family.crowns[f]) + " holds v,w but is sent to " + phi[f].label());
        }
        for (auto s : all_cvertices()) {
            PointSet covered;
            for (std::size_t f = 0; f < family.size(); ++f)
                if (phi[f] == s)
                    covered |= family.crowns[f].points();
            if (crown.points().subset_of(covered))
                violations.push_back("the preimage of " + s.label() + " covers the whole crown");
        }
        return violations;
    }
}
